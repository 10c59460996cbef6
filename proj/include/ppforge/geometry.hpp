#pragma once

#include "ppforge/algebras.hpp"
#include "ppforge/representations.hpp"

namespace ppforge {

// omega(x, y) = x^T W y with W(i,j) = omega(e_i, e_j).
inline Rat form_eval(const Mat& w, const Vec& x, const Vec& y) {
    Rat s = 0;
    for (int i = 0; i < w.rows(); ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < w.cols(); ++j)
            if (w(i, j) != 0 && y[static_cast<std::size_t>(j)] != 0)
                s += x[static_cast<std::size_t>(i)] * w(i, j) * y[static_cast<std::size_t>(j)];
    }
    return s;
}

// omega(x+xi, y+eta) = <xi, y> - <eta, x> in the block basis
// (e_1..e_n, f_1..f_n) with f_i = e_i^*.
inline Mat standard_omega(int n) {
    Mat w(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        w(i, n + i) = -1;
        w(n + i, i) = 1;
    }
    return w;
}

struct SplitDecoration {
    int dim_p = 0;
    int dim_q = 0;
};

namespace detail {
inline CheckReport check_form_basics(const Mat& w) {
    CheckReport rep;
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < w.cols(); ++j)
            rep.require_eq("skew", {i, j}, {w(i, j)}, {-w(j, i)});
    if (!w.is_invertible())
        rep.add("non-degenerate", {}, {Rat(0)}, {Rat(1)});
    return rep;
}
} // namespace detail

// Skew non-degenerate omega that is a 2-cocycle for the bracket and a
// Connes cocycle for the dot:
//   omega({x,y},z) + omega({y,z},x) + omega({z,x},y) = 0
//   omega(x.y,z)   + omega(y.z,x)   + omega(z.x,y)   = 0
inline CheckReport is_symplectic_poisson(const PoissonAlgebra& p, const Mat& w) {
    if (w.rows() != p.dim || w.cols() != p.dim)
        throw DimensionMismatch("is_symplectic_poisson: form dimension mismatch");
    CheckReport rep;
    rep.merge(is_poisson(p), "poisson:");
    rep.merge(detail::check_form_basics(w));
    int n = p.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                Rat br = form_eval(w, p.bracket.prod_basis(i, j), ek) +
                         form_eval(w, p.bracket.prod_basis(j, k), ei) +
                         form_eval(w, p.bracket.prod_basis(k, i), ej);
                rep.require_eq("cocycle-bracket", {i, j, k}, {br}, {Rat(0)});
                Rat dt = form_eval(w, p.dot.prod_basis(i, j), ek) +
                         form_eval(w, p.dot.prod_basis(j, k), ei) +
                         form_eval(w, p.dot.prod_basis(k, i), ej);
                rep.require_eq("cocycle-dot", {i, j, k}, {dt}, {Rat(0)});
            }
    return rep;
}

// Solves omega(x*y, z) = omega(y, x.z) and omega(x o y, z) = -omega(y, {x,z})
// for the unique compatible pre-Poisson products; non-degeneracy makes the
// linear systems uniquely solvable.
inline PrePoissonAlgebra compatible_pre_poisson(const PoissonAlgebra& p, const Mat& w) {
    if (!is_symplectic_poisson(p, w).passed)
        throw NotSymplectic("compatible_pre_poisson: the form is not symplectic for this algebra");
    int n = p.dim;
    Mat wt_inv = w.transpose().inverse();
    MultTable star(n), circ(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ej = basis_vec(n, j);
            Vec ts = zero_vec(n), tc = zero_vec(n);
            for (int k = 0; k < n; ++k) {
                ts[static_cast<std::size_t>(k)] = form_eval(w, ej, p.dot.prod_basis(i, k));
                tc[static_cast<std::size_t>(k)] = -form_eval(w, ej, p.bracket.prod_basis(i, k));
            }
            Vec vs = wt_inv.apply(ts);
            Vec vc = wt_inv.apply(tc);
            for (int k = 0; k < n; ++k) {
                star.c(i, j, k) = vs[static_cast<std::size_t>(k)];
                circ.c(i, j, k) = vc[static_cast<std::size_t>(k)];
            }
        }
    PrePoissonAlgebra out(star, circ);
    if (!(sub_adjacent(out) == p))
        throw InvalidInput("compatible_pre_poisson: sub-adjacent structure does not recover the input");
    return out;
}

// Invariance of a quadratic pre-Poisson algebra:
//   omega(x*y, z) = omega(y, x*z + z*x)        [quadratic-1]
//   omega(x o y, z) = -omega(y, x o z - z o x) [quadratic-2]
// plus the derived identities
//   omega(x*y, z) = omega(z*y, x), omega(x o y, z) = -omega(z o y, x)
// which are consequences, evaluated as a cross-check.
inline CheckReport is_quadratic_pre_poisson(const PrePoissonAlgebra& p, const Mat& w) {
    if (w.rows() != p.dim || w.cols() != p.dim)
        throw DimensionMismatch("is_quadratic_pre_poisson: form dimension mismatch");
    CheckReport rep;
    rep.merge(is_pre_poisson(p), "pre-poisson:");
    rep.merge(detail::check_form_basics(w));
    int n = p.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                Rat lhs = form_eval(w, p.star.prod_basis(i, j), ek);
                Rat rhs = form_eval(w, ej, vec_add(p.star.prod_basis(i, k), p.star.prod_basis(k, i)));
                rep.require_eq("quadratic-1", {i, j, k}, {lhs}, {rhs});

                lhs = form_eval(w, p.circ.prod_basis(i, j), ek);
                rhs = -form_eval(w, ej, vec_sub(p.circ.prod_basis(i, k), p.circ.prod_basis(k, i)));
                rep.require_eq("quadratic-2", {i, j, k}, {lhs}, {rhs});

                lhs = form_eval(w, p.star.prod_basis(i, j), ek);
                rhs = form_eval(w, p.star.prod_basis(k, j), ei);
                rep.require_eq("quadratic-3a", {i, j, k}, {lhs}, {rhs});

                lhs = form_eval(w, p.circ.prod_basis(i, j), ek);
                rhs = -form_eval(w, p.circ.prod_basis(k, j), ei);
                rep.require_eq("quadratic-3b", {i, j, k}, {lhs}, {rhs});
            }
    return rep;
}

// The semidirect phase space P^c x P* through the dual of the left
// multiplication representation, carrying the standard form.
inline std::pair<PoissonAlgebra, Mat> phase_space(const PrePoissonAlgebra& p) {
    if (!is_pre_poisson(p).passed)
        throw InvalidInput("phase_space: input fails the pre-Poisson axioms");
    PoissonRep dual = poisson_dual_rep(left_mult_poisson_rep(p));
    PoissonAlgebra big = semidirect_poisson(sub_adjacent(p), dual);
    Mat w = standard_omega(p.dim);
    if (!is_symplectic_poisson(big, w).passed)
        throw InvalidInput("phase_space: the constructed algebra is not symplectic");
    return {big, w};
}

// Symplectic Poisson algebra on P + P* with the standard form such that
// both blocks are Poisson subalgebras.
inline CheckReport is_phase_space(const PoissonAlgebra& big, SplitDecoration split, const Mat& w) {
    if (split.dim_p + split.dim_q != big.dim)
        throw DimensionMismatch("is_phase_space: split does not partition the basis");
    CheckReport rep;
    if (split.dim_p != split.dim_q)
        rep.add("split-balanced", {}, {Rat(split.dim_p)}, {Rat(split.dim_q)});
    if (w != standard_omega(split.dim_p))
        rep.add("standard-form", {}, w.flatten(), standard_omega(split.dim_p).flatten());
    rep.merge(is_symplectic_poisson(big, w));
    auto closed = [&](const MultTable& t, int lo, int len, const std::string& id) {
        if (!t.block_closed(lo, len))
            rep.add(id, {lo}, {Rat(0)}, {Rat(1)});
    };
    closed(big.dot, 0, split.dim_p, "block-p-closed-dot");
    closed(big.bracket, 0, split.dim_p, "block-p-closed-bracket");
    closed(big.dot, split.dim_p, split.dim_q, "block-q-closed-dot");
    closed(big.bracket, split.dim_p, split.dim_q, "block-q-closed-bracket");
    return rep;
}

// Quadratic pre-Poisson algebra decomposing into two isotropic subalgebras.
inline CheckReport is_manin_triple(const PrePoissonAlgebra& p, SplitDecoration split,
                                   const Mat& w) {
    if (split.dim_p + split.dim_q != p.dim)
        throw DimensionMismatch("is_manin_triple: split does not partition the basis");
    CheckReport rep = is_quadratic_pre_poisson(p, w);
    auto closed = [&](const MultTable& t, int lo, int len, const std::string& id) {
        if (!t.block_closed(lo, len))
            rep.add(id, {lo}, {Rat(0)}, {Rat(1)});
    };
    closed(p.star, 0, split.dim_p, "block-p-closed-star");
    closed(p.circ, 0, split.dim_p, "block-p-closed-circ");
    closed(p.star, split.dim_p, split.dim_q, "block-q-closed-star");
    closed(p.circ, split.dim_p, split.dim_q, "block-q-closed-circ");
    auto isotropic = [&](int lo, int len, const std::string& id) {
        for (int i = lo; i < lo + len; ++i)
            for (int j = lo; j < lo + len; ++j)
                rep.require_eq(id, {i, j}, {w(i, j)}, {Rat(0)});
    };
    isotropic(0, split.dim_p, "isotropic-p");
    isotropic(split.dim_p, split.dim_q, "isotropic-q");
    return rep;
}

} // namespace ppforge
