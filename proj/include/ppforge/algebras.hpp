#pragma once

#include <string>

#include "ppforge/check.hpp"
#include "ppforge/errors.hpp"
#include "ppforge/mult_table.hpp"

namespace ppforge {

// Axiom checkers quantify over basis tuples only; bilinearity makes that
// equivalent to all elements. Violations record both evaluated sides as
// coefficient vectors.

inline void require_dim(const MultTable& t, int dim, const char* what) {
    if (t.dim() != dim) throw DimensionMismatch(std::string(what) + ": table dimension mismatch");
}

// x * (y * z) = (x * y + y * x) * z
inline CheckReport is_zinbiel(const MultTable& t, CheckOptions opts = {}) {
    CheckReport rep;
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = t.prod(basis_vec(n, i), t.prod_basis(j, k));
                Vec rhs = t.prod(vec_add(t.prod_basis(i, j), t.prod_basis(j, i)), basis_vec(n, k));
                if (!rep.require_eq("zinbiel", {i, j, k}, lhs, rhs) && opts.stop_at_first)
                    return rep;
            }
    return rep;
}

// (x o y) o z - x o (y o z) symmetric in x, y
inline CheckReport is_pre_lie(const MultTable& t, CheckOptions opts = {}) {
    CheckReport rep;
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = vec_sub(t.prod(t.prod_basis(i, j), basis_vec(n, k)),
                                  t.prod(basis_vec(n, i), t.prod_basis(j, k)));
                Vec rhs = vec_sub(t.prod(t.prod_basis(j, i), basis_vec(n, k)),
                                  t.prod(basis_vec(n, j), t.prod_basis(i, k)));
                if (!rep.require_eq("pre-lie", {i, j, k}, lhs, rhs) && opts.stop_at_first)
                    return rep;
            }
    return rep;
}

inline CheckReport is_commutative_associative(const MultTable& t, CheckOptions opts = {}) {
    CheckReport rep;
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!rep.require_eq("commutative", {i, j}, t.prod_basis(i, j), t.prod_basis(j, i)) &&
                opts.stop_at_first)
                return rep;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = t.prod(t.prod_basis(i, j), basis_vec(n, k));
                Vec rhs = t.prod(basis_vec(n, i), t.prod_basis(j, k));
                if (!rep.require_eq("associative", {i, j, k}, lhs, rhs) && opts.stop_at_first)
                    return rep;
            }
    return rep;
}

// Skewness is checked together with {x,x} = 0, which is stronger in
// characteristic 2 and harmless over Q.
inline CheckReport is_lie(const MultTable& t, CheckOptions opts = {}) {
    CheckReport rep;
    int n = t.dim();
    for (int i = 0; i < n; ++i) {
        if (!rep.require_eq("lie-alternating", {i}, t.prod_basis(i, i), zero_vec(n)) &&
            opts.stop_at_first)
            return rep;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec rhs = vec_scale(-1, t.prod_basis(j, i));
            if (!rep.require_eq("lie-skew", {i, j}, t.prod_basis(i, j), rhs) && opts.stop_at_first)
                return rep;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec s = t.prod(basis_vec(n, i), t.prod_basis(j, k));
                s = vec_add(s, t.prod(basis_vec(n, j), t.prod_basis(k, i)));
                s = vec_add(s, t.prod(basis_vec(n, k), t.prod_basis(i, j)));
                if (!rep.require_eq("lie-jacobi", {i, j, k}, s, zero_vec(n)) && opts.stop_at_first)
                    return rep;
            }
    return rep;
}

// Commutative associative dot, Lie bracket, and the Leibniz rule
// {x, y.z} = {x,y}.z + y.{x,z}.
inline CheckReport is_poisson(const MultTable& dot, const MultTable& bracket,
                              CheckOptions opts = {}) {
    if (dot.dim() != bracket.dim())
        throw DimensionMismatch("is_poisson: dot and bracket dimensions differ");
    CheckReport rep = is_commutative_associative(dot, opts);
    if (!rep.passed && opts.stop_at_first) return rep;
    rep.merge(is_lie(bracket, opts));
    if (!rep.passed && opts.stop_at_first) return rep;
    int n = dot.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = bracket.prod(basis_vec(n, i), dot.prod_basis(j, k));
                Vec rhs = vec_add(dot.prod(bracket.prod_basis(i, j), basis_vec(n, k)),
                                  dot.prod(basis_vec(n, j), bracket.prod_basis(i, k)));
                if (!rep.require_eq("leibniz", {i, j, k}, lhs, rhs) && opts.stop_at_first)
                    return rep;
            }
    return rep;
}

// (x o y - y o x) * z = x o (y * z) - y * (x o z)        [pre-poisson-1]
// (x * y + y * x) o z = x * (y o z) + y * (x o z)        [pre-poisson-2]
inline CheckReport is_pre_poisson(const MultTable& star, const MultTable& circ,
                                  CheckOptions opts = {}) {
    if (star.dim() != circ.dim())
        throw DimensionMismatch("is_pre_poisson: star and circ dimensions differ");
    CheckReport rep = is_zinbiel(star, opts);
    if (!rep.passed && opts.stop_at_first) return rep;
    rep.merge(is_pre_lie(circ, opts));
    if (!rep.passed && opts.stop_at_first) return rep;
    int n = star.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = star.prod(vec_sub(circ.prod_basis(i, j), circ.prod_basis(j, i)),
                                    basis_vec(n, k));
                Vec rhs = vec_sub(circ.prod(basis_vec(n, i), star.prod_basis(j, k)),
                                  star.prod(basis_vec(n, j), circ.prod_basis(i, k)));
                if (!rep.require_eq("pre-poisson-1", {i, j, k}, lhs, rhs) && opts.stop_at_first)
                    return rep;

                lhs = circ.prod(vec_add(star.prod_basis(i, j), star.prod_basis(j, i)),
                                basis_vec(n, k));
                rhs = vec_add(star.prod(basis_vec(n, i), circ.prod_basis(j, k)),
                              star.prod(basis_vec(n, j), circ.prod_basis(i, k)));
                if (!rep.require_eq("pre-poisson-2", {i, j, k}, lhs, rhs) && opts.stop_at_first)
                    return rep;
            }
    return rep;
}

// A Zinbiel product and a pre-Lie product on one space, validated on
// construction unless built through unchecked().
struct PrePoissonAlgebra {
    int dim = 0;
    MultTable star;
    MultTable circ;

    PrePoissonAlgebra() = default;

    PrePoissonAlgebra(MultTable star_table, MultTable circ_table)
        : dim(star_table.dim()), star(std::move(star_table)), circ(std::move(circ_table)) {
        if (star.dim() != circ.dim())
            throw DimensionMismatch("pre-Poisson algebra: star and circ dimensions differ");
        if (!is_pre_poisson(star, circ).passed)
            throw InvalidInput("pre-Poisson axioms fail");
    }

    static PrePoissonAlgebra unchecked(MultTable star_table, MultTable circ_table) {
        PrePoissonAlgebra p;
        p.dim = star_table.dim();
        p.star = std::move(star_table);
        p.circ = std::move(circ_table);
        if (p.star.dim() != p.circ.dim())
            throw DimensionMismatch("pre-Poisson algebra: star and circ dimensions differ");
        return p;
    }

    bool operator==(const PrePoissonAlgebra& o) const {
        return dim == o.dim && star == o.star && circ == o.circ;
    }
};

struct PoissonAlgebra {
    int dim = 0;
    MultTable dot;
    MultTable bracket;

    PoissonAlgebra() = default;

    PoissonAlgebra(MultTable dot_table, MultTable bracket_table)
        : dim(dot_table.dim()), dot(std::move(dot_table)), bracket(std::move(bracket_table)) {
        if (dot.dim() != bracket.dim())
            throw DimensionMismatch("Poisson algebra: dot and bracket dimensions differ");
        if (!is_poisson(dot, bracket).passed)
            throw InvalidInput("Poisson axioms fail");
    }

    static PoissonAlgebra unchecked(MultTable dot_table, MultTable bracket_table) {
        PoissonAlgebra p;
        p.dim = dot_table.dim();
        p.dot = std::move(dot_table);
        p.bracket = std::move(bracket_table);
        if (p.dot.dim() != p.bracket.dim())
            throw DimensionMismatch("Poisson algebra: dot and bracket dimensions differ");
        return p;
    }

    bool operator==(const PoissonAlgebra& o) const {
        return dim == o.dim && dot == o.dot && bracket == o.bracket;
    }
};

inline CheckReport is_pre_poisson(const PrePoissonAlgebra& p, CheckOptions opts = {}) {
    return is_pre_poisson(p.star, p.circ, opts);
}

inline CheckReport is_poisson(const PoissonAlgebra& p, CheckOptions opts = {}) {
    return is_poisson(p.dot, p.bracket, opts);
}

// x . y = x * y + y * x on a Zinbiel table.
inline MultTable sub_adjacent_zinbiel(const MultTable& t) {
    if (!is_zinbiel(t).passed)
        throw InvalidInput("sub_adjacent_zinbiel: input is not Zinbiel");
    MultTable out = t.symmetrized();
    if (!is_commutative_associative(out).passed)
        throw InvalidInput("sub_adjacent_zinbiel: output fails commutativity/associativity");
    return out;
}

// [x, y] = x o y - y o x on a pre-Lie table.
inline MultTable sub_adjacent_pre_lie(const MultTable& t) {
    if (!is_pre_lie(t).passed)
        throw InvalidInput("sub_adjacent_pre_lie: input is not pre-Lie");
    MultTable out = t.antisymmetrized();
    if (!is_lie(out).passed)
        throw InvalidInput("sub_adjacent_pre_lie: output fails the Lie axioms");
    return out;
}

// x . y = x * y + y * x, {x, y} = x o y - y o x.
inline PoissonAlgebra sub_adjacent(const PrePoissonAlgebra& p) {
    if (!is_pre_poisson(p).passed)
        throw InvalidInput("sub_adjacent: input fails the pre-Poisson axioms");
    return PoissonAlgebra(p.star.symmetrized(), p.circ.antisymmetrized());
}

// phi(x # y) = phi(x) # phi(y) for each product of the kind.
inline CheckReport is_homomorphism(const Mat& phi, const PrePoissonAlgebra& src,
                                   const PrePoissonAlgebra& dst) {
    if (phi.cols() != src.dim || phi.rows() != dst.dim)
        throw DimensionMismatch("is_homomorphism: map shape does not match algebras");
    CheckReport rep;
    for (int i = 0; i < src.dim; ++i)
        for (int j = 0; j < src.dim; ++j) {
            Vec lhs = phi.apply(src.star.prod_basis(i, j));
            Vec rhs = dst.star.prod(phi.col(i), phi.col(j));
            rep.require_eq("hom-star", {i, j}, lhs, rhs);
            lhs = phi.apply(src.circ.prod_basis(i, j));
            rhs = dst.circ.prod(phi.col(i), phi.col(j));
            rep.require_eq("hom-circ", {i, j}, lhs, rhs);
        }
    return rep;
}

inline CheckReport is_homomorphism(const Mat& phi, const PoissonAlgebra& src,
                                   const PoissonAlgebra& dst) {
    if (phi.cols() != src.dim || phi.rows() != dst.dim)
        throw DimensionMismatch("is_homomorphism: map shape does not match algebras");
    CheckReport rep;
    for (int i = 0; i < src.dim; ++i)
        for (int j = 0; j < src.dim; ++j) {
            Vec lhs = phi.apply(src.dot.prod_basis(i, j));
            Vec rhs = dst.dot.prod(phi.col(i), phi.col(j));
            rep.require_eq("hom-dot", {i, j}, lhs, rhs);
            lhs = phi.apply(src.bracket.prod_basis(i, j));
            rhs = dst.bracket.prod(phi.col(i), phi.col(j));
            rep.require_eq("hom-bracket", {i, j}, lhs, rhs);
        }
    return rep;
}

// Weight-lambda Rota-Baxter identities on a Poisson algebra:
//   B(x).B(y) = B(B(x).y + x.B(y) + lambda x.y)  and the bracket analogue.
inline CheckReport is_rb_poisson(const PoissonAlgebra& p, const Mat& B, const Rat& lambda) {
    if (B.rows() != p.dim || B.cols() != p.dim)
        throw DimensionMismatch("is_rb_poisson: operator shape mismatch");
    CheckReport rep;
    for (int i = 0; i < p.dim; ++i)
        for (int j = 0; j < p.dim; ++j) {
            Vec bi = B.col(i), bj = B.col(j);
            Vec ei = basis_vec(p.dim, i), ej = basis_vec(p.dim, j);
            Vec lhs = p.dot.prod(bi, bj);
            Vec inner = vec_add(p.dot.prod(bi, ej), p.dot.prod(ei, bj));
            inner = vec_add(inner, vec_scale(lambda, p.dot.prod_basis(i, j)));
            rep.require_eq("rb-dot", {i, j}, lhs, B.apply(inner));

            lhs = p.bracket.prod(bi, bj);
            inner = vec_add(p.bracket.prod(bi, ej), p.bracket.prod(ei, bj));
            inner = vec_add(inner, vec_scale(lambda, p.bracket.prod_basis(i, j)));
            rep.require_eq("rb-bracket", {i, j}, lhs, B.apply(inner));
        }
    return rep;
}

// x *_B y = B(x).y, x o_B y = {B(x), y} for a weight-zero Rota-Baxter
// operator B. B becomes a homomorphism from the sub-adjacent Poisson
// algebra of the result back to p.
inline PrePoissonAlgebra pre_poisson_from_rb0(const PoissonAlgebra& p, const Mat& B) {
    if (!is_rb_poisson(p, B, Rat(0)).passed)
        throw NotRotaBaxter("pre_poisson_from_rb0: B is not a weight-0 Rota-Baxter operator");
    int n = p.dim;
    MultTable star(n), circ(n);
    for (int i = 0; i < n; ++i) {
        Vec bi = B.col(i);
        for (int j = 0; j < n; ++j) {
            Vec s = p.dot.prod(bi, basis_vec(n, j));
            Vec c = p.bracket.prod(bi, basis_vec(n, j));
            for (int k = 0; k < n; ++k) {
                star.c(i, j, k) = s[static_cast<std::size_t>(k)];
                circ.c(i, j, k) = c[static_cast<std::size_t>(k)];
            }
        }
    }
    PrePoissonAlgebra out(star, circ);
    if (!is_homomorphism(B, sub_adjacent(out), p).passed)
        throw InvalidInput("pre_poisson_from_rb0: homomorphism postcondition failed");
    return out;
}

} // namespace ppforge
