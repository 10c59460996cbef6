#pragma once

#include <vector>

#include "ppforge/algebras.hpp"
#include "ppforge/check.hpp"
#include "ppforge/linalg.hpp"

namespace ppforge {

// Representations store one matrix per basis element of the acting algebra.
// Operator values at arbitrary elements are linear combinations of those.

inline Mat operator_at(const std::vector<Mat>& maps, const Vec& x) {
    Mat m(maps.empty() ? 0 : maps[0].rows(), maps.empty() ? 0 : maps[0].cols());
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (x[i] != 0) m = m + maps[i].scaled(x[i]);
    return m;
}

struct PoissonRep {
    PoissonAlgebra algebra;
    int dimv = 0;
    std::vector<Mat> varrho;   // Lie part
    std::vector<Mat> varsigma; // associative part
};

struct PrePoissonRep {
    PrePoissonAlgebra algebra;
    int dimv = 0;
    std::vector<Mat> rho, mu, theta, gamma;
};

namespace detail {
inline void require_rep_shape(int dim, int dimv, const std::vector<Mat>& maps,
                              const char* what) {
    if (static_cast<int>(maps.size()) != dim)
        throw DimensionMismatch(std::string(what) + ": one matrix per basis element expected");
    for (const auto& m : maps)
        if (m.rows() != dimv || m.cols() != dimv)
            throw DimensionMismatch(std::string(what) + ": operator shape mismatch");
}
} // namespace detail

inline CheckReport is_poisson_rep(const PoissonRep& r) {
    detail::require_rep_shape(r.algebra.dim, r.dimv, r.varrho, "is_poisson_rep");
    detail::require_rep_shape(r.algebra.dim, r.dimv, r.varsigma, "is_poisson_rep");
    CheckReport rep;
    int n = r.algebra.dim;
    const auto& dot = r.algebra.dot;
    const auto& br = r.algebra.bracket;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat &ri = r.varrho[static_cast<std::size_t>(i)], &rj = r.varrho[static_cast<std::size_t>(j)];
            const Mat &si = r.varsigma[static_cast<std::size_t>(i)], &sj = r.varsigma[static_cast<std::size_t>(j)];
            rep.require_eq("lie-rep", {i, j}, (ri * rj - rj * ri).flatten(),
                           operator_at(r.varrho, br.prod_basis(i, j)).flatten());
            rep.require_eq("assoc-rep", {i, j}, (si * sj).flatten(),
                           operator_at(r.varsigma, dot.prod_basis(i, j)).flatten());
            rep.require_eq("poisson-rep-1", {i, j},
                           operator_at(r.varrho, dot.prod_basis(i, j)).flatten(),
                           (sj * ri + si * rj).flatten());
            rep.require_eq("poisson-rep-2", {i, j},
                           operator_at(r.varsigma, br.prod_basis(i, j)).flatten(),
                           (ri * sj - sj * ri).flatten());
        }
    return rep;
}

// Zinbiel representation laws, pre-Lie representation laws, and the five
// pre-Poisson compatibility identities. The Zinbiel chain
// rho(x)mu(y) = mu(x*y) = mu(y)rho(x) + mu(y)mu(x) is split in two.
inline CheckReport is_pre_poisson_rep(const PrePoissonRep& r) {
    detail::require_rep_shape(r.algebra.dim, r.dimv, r.rho, "is_pre_poisson_rep");
    detail::require_rep_shape(r.algebra.dim, r.dimv, r.mu, "is_pre_poisson_rep");
    detail::require_rep_shape(r.algebra.dim, r.dimv, r.theta, "is_pre_poisson_rep");
    detail::require_rep_shape(r.algebra.dim, r.dimv, r.gamma, "is_pre_poisson_rep");
    CheckReport rep;
    int n = r.algebra.dim;
    const auto& star = r.algebra.star;
    const auto& circ = r.algebra.circ;
    auto at = [&](const std::vector<Mat>& maps, const Vec& x) { return operator_at(maps, x); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Mat &pi = r.rho[static_cast<std::size_t>(i)], &pj = r.rho[static_cast<std::size_t>(j)];
            const Mat &mi = r.mu[static_cast<std::size_t>(i)], &mj = r.mu[static_cast<std::size_t>(j)];
            const Mat &ti = r.theta[static_cast<std::size_t>(i)], &tj = r.theta[static_cast<std::size_t>(j)];
            const Mat &gi = r.gamma[static_cast<std::size_t>(i)], &gj = r.gamma[static_cast<std::size_t>(j)];
            Vec sij = star.prod_basis(i, j);
            Vec sji = star.prod_basis(j, i);
            Vec cij = circ.prod_basis(i, j);
            Vec comm = vec_sub(cij, circ.prod_basis(j, i));

            rep.require_eq("zinbiel-rep-1", {i, j}, (pi * pj).flatten(),
                           (at(r.rho, sij) + at(r.rho, sji)).flatten());
            rep.require_eq("zinbiel-rep-2", {i, j}, (pi * mj).flatten(),
                           at(r.mu, sij).flatten());
            rep.require_eq("zinbiel-rep-3", {i, j}, at(r.mu, sij).flatten(),
                           (mj * pi + mj * mi).flatten());
            rep.require_eq("pre-lie-rep-1", {i, j}, (ti * tj - tj * ti).flatten(),
                           at(r.theta, comm).flatten());
            rep.require_eq("pre-lie-rep-2", {i, j}, (ti * gj - gj * ti).flatten(),
                           (at(r.gamma, cij) - gj * gi).flatten());

            rep.require_eq("rep-1", {i, j}, at(r.rho, comm).flatten(),
                           (ti * pj - pj * ti).flatten());
            rep.require_eq("rep-2", {i, j}, at(r.mu, cij).flatten(),
                           (mj * gi - mj * ti + ti * mj).flatten());
            rep.require_eq("rep-3", {i, j}, at(r.mu, cij).flatten(),
                           (gj * pi + gj * mi - pi * gj).flatten());
            rep.require_eq("rep-4", {i, j}, at(r.theta, vec_add(sij, sji)).flatten(),
                           (pi * tj + pj * ti).flatten());
            rep.require_eq("rep-5", {i, j}, at(r.gamma, sij).flatten(),
                           (pi * gj + mj * gi - mj * ti).flatten());
        }
    return rep;
}

inline PrePoissonRep regular_rep(const PrePoissonAlgebra& p) {
    if (!is_pre_poisson(p).passed)
        throw InvalidInput("regular_rep: input fails the pre-Poisson axioms");
    PrePoissonRep r{p, p.dim, {}, {}, {}, {}};
    for (int i = 0; i < p.dim; ++i) {
        r.rho.push_back(p.star.left_op(i));
        r.mu.push_back(p.star.right_op(i));
        r.theta.push_back(p.circ.left_op(i));
        r.gamma.push_back(p.circ.right_op(i));
    }
    return r;
}

// (V*; -rho* - mu*, mu*, theta* - gamma*, -gamma*), with e_i* identified
// with e_i so that every starred operator is a negated transpose.
inline PrePoissonRep dual_rep(const PrePoissonRep& r) {
    if (!is_pre_poisson_rep(r).passed)
        throw InvalidInput("dual_rep: input is not a representation");
    PrePoissonRep d{r.algebra, r.dimv, {}, {}, {}, {}};
    for (int i = 0; i < r.algebra.dim; ++i) {
        const Mat& rho_t = r.rho[static_cast<std::size_t>(i)];
        const Mat& mu_t = r.mu[static_cast<std::size_t>(i)];
        const Mat& th_t = r.theta[static_cast<std::size_t>(i)];
        const Mat& ga_t = r.gamma[static_cast<std::size_t>(i)];
        d.rho.push_back(rho_t.transpose() + mu_t.transpose());
        d.mu.push_back(-mu_t.transpose());
        d.theta.push_back(-th_t.transpose() + ga_t.transpose());
        d.gamma.push_back(ga_t.transpose());
    }
    return d;
}

inline PrePoissonRep coregular_rep(const PrePoissonAlgebra& p) {
    return dual_rep(regular_rep(p));
}

// Regular representation of a Poisson algebra: bracket and dot left
// multiplications.
inline PoissonRep poisson_regular_rep(const PoissonAlgebra& p) {
    PoissonRep r{p, p.dim, {}, {}};
    for (int i = 0; i < p.dim; ++i) {
        r.varrho.push_back(p.bracket.left_op(i));
        r.varsigma.push_back(p.dot.left_op(i));
    }
    return r;
}

// Dual of a Poisson representation: (varrho*, -varsigma*) = (-rho^T, +sigma^T).
inline PoissonRep poisson_dual_rep(const PoissonRep& r) {
    PoissonRep d{r.algebra, r.dimv, {}, {}};
    for (int i = 0; i < r.algebra.dim; ++i) {
        d.varrho.push_back(-r.varrho[static_cast<std::size_t>(i)].transpose());
        d.varsigma.push_back(r.varsigma[static_cast<std::size_t>(i)].transpose());
    }
    return d;
}

// (P; L_*, L_o) as a representation of the sub-adjacent Poisson algebra.
inline PoissonRep left_mult_poisson_rep(const PrePoissonAlgebra& p) {
    PoissonRep r{sub_adjacent(p), p.dim, {}, {}};
    for (int i = 0; i < p.dim; ++i) {
        r.varrho.push_back(p.circ.left_op(i));
        r.varsigma.push_back(p.star.left_op(i));
    }
    return r;
}

// (x+u) . (y+v) = x.y + sigma(x)v + sigma(y)u
// {x+u, y+v}    = {x,y} + rho(x)v - rho(y)u
inline std::pair<MultTable, MultTable> semidirect_poisson_tables(const PoissonAlgebra& p,
                                                                 const PoissonRep& r) {
    int n = p.dim, m = r.dimv, d = n + m;
    MultTable dot(d), br(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                dot.c(i, j, k) = p.dot.c(i, j, k);
                br.c(i, j, k) = p.bracket.c(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < m; ++k) {
                dot.c(i, n + b, n + k) = r.varsigma[static_cast<std::size_t>(i)](k, b);
                dot.c(n + b, i, n + k) = r.varsigma[static_cast<std::size_t>(i)](k, b);
                br.c(i, n + b, n + k) = r.varrho[static_cast<std::size_t>(i)](k, b);
                br.c(n + b, i, n + k) = -r.varrho[static_cast<std::size_t>(i)](k, b);
            }
    return {dot, br};
}

inline PoissonAlgebra semidirect_poisson(const PoissonAlgebra& p, const PoissonRep& r) {
    auto [dot, br] = semidirect_poisson_tables(p, r);
    if (!is_poisson(dot, br).passed)
        throw InvalidInput("semidirect_poisson: result fails the Poisson axioms");
    return PoissonAlgebra::unchecked(dot, br);
}

// (x+u) * (y+v) = x*y + rho(x)v + mu(y)u
// (x+u) o (y+v) = x o y + theta(x)v + gamma(y)u
inline std::pair<MultTable, MultTable> semidirect_pre_poisson_tables(const PrePoissonAlgebra& p,
                                                                     const PrePoissonRep& r) {
    int n = p.dim, m = r.dimv, d = n + m;
    MultTable star(d), circ(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                star.c(i, j, k) = p.star.c(i, j, k);
                circ.c(i, j, k) = p.circ.c(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < m; ++k) {
                star.c(i, n + b, n + k) = r.rho[static_cast<std::size_t>(i)](k, b);
                star.c(n + b, i, n + k) = r.mu[static_cast<std::size_t>(i)](k, b);
                circ.c(i, n + b, n + k) = r.theta[static_cast<std::size_t>(i)](k, b);
                circ.c(n + b, i, n + k) = r.gamma[static_cast<std::size_t>(i)](k, b);
            }
    return {star, circ};
}

inline PrePoissonAlgebra semidirect_pre_poisson(const PrePoissonAlgebra& p,
                                                const PrePoissonRep& r) {
    auto [star, circ] = semidirect_pre_poisson_tables(p, r);
    if (!is_pre_poisson(star, circ).passed)
        throw InvalidInput("semidirect_pre_poisson: result fails the pre-Poisson axioms");
    return PrePoissonAlgebra::unchecked(star, circ);
}

// An action of P on Q: a representation on the underlying space of Q whose
// operators interact with the Q products through ten identities.
struct Action {
    PrePoissonAlgebra source; // P
    PrePoissonAlgebra target; // Q
    std::vector<Mat> rho, mu, theta, gamma;
};

inline CheckReport is_action(const Action& a) {
    PrePoissonRep under{a.source, a.target.dim, a.rho, a.mu, a.theta, a.gamma};
    CheckReport rep = is_pre_poisson_rep(under);
    int n = a.source.dim, m = a.target.dim;
    const MultTable& qs = a.target.star;
    const MultTable& qc = a.target.circ;
    for (int x = 0; x < n; ++x) {
        const Mat& P = a.rho[static_cast<std::size_t>(x)];
        const Mat& M = a.mu[static_cast<std::size_t>(x)];
        const Mat& T = a.theta[static_cast<std::size_t>(x)];
        const Mat& G = a.gamma[static_cast<std::size_t>(x)];
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v) {
                Vec eu = basis_vec(m, u), ev = basis_vec(m, v);
                Vec Mu = M.col(u), Mv = M.col(v), Pu = P.col(u), Pv = P.col(v);
                Vec Tu = T.col(u), Tv = T.col(v), Gu = G.col(u), Gv = G.col(v);
                Vec uv_s = qs.prod_basis(u, v), vu_s = qs.prod_basis(v, u);
                Vec uv_c = qc.prod_basis(u, v), vu_c = qc.prod_basis(v, u);

                rep.require_eq("action-1", {x, u, v}, qs.prod(eu, Mv),
                               M.apply(vec_add(uv_s, vu_s)));
                rep.require_eq("action-2", {x, u, v}, qs.prod(eu, Pv),
                               vec_add(qs.prod(Mu, ev), qs.prod(Pu, ev)));
                rep.require_eq("action-3", {x, u, v}, P.apply(uv_s),
                               vec_add(qs.prod(Mu, ev), qs.prod(Pu, ev)));
                rep.require_eq("action-4", {x, u, v}, T.apply(uv_c),
                               vec_sub(vec_add(qc.prod(Tu, ev), qc.prod(eu, Tv)),
                                       qc.prod(Gu, ev)));
                rep.require_eq("action-5", {x, u, v}, G.apply(vec_sub(uv_c, vu_c)),
                               vec_sub(qc.prod(eu, Gv), qc.prod(ev, Gu)));
                rep.require_eq("action-6", {x, u, v}, M.apply(vec_sub(uv_c, vu_c)),
                               vec_sub(qc.prod(eu, Mv), qs.prod(ev, Gu)));
                rep.require_eq("action-7", {x, u, v}, T.apply(uv_s),
                               vec_add(qs.prod(vec_sub(Tu, Gu), ev), qs.prod(eu, Tv)));
                rep.require_eq("action-8", {x, u, v}, P.apply(uv_c),
                               vec_add(qs.prod(vec_sub(Tu, Gu), ev), qc.prod(eu, Pv)));
                rep.require_eq("action-9", {x, u, v}, G.apply(vec_add(uv_s, vu_s)),
                               vec_add(qs.prod(eu, Gv), qs.prod(ev, Gu)));
                rep.require_eq("action-10", {x, u, v}, P.apply(uv_c),
                               vec_sub(qc.prod(vec_add(Pu, Mu), ev), qs.prod(eu, Tv)));
            }
    }
    return rep;
}

inline Action regular_action(const PrePoissonAlgebra& p) {
    auto r = regular_rep(p);
    return Action{p, p, r.rho, r.mu, r.theta, r.gamma};
}

// Coregular maps of P acting on an explicit algebra structure on P*.
inline Action coregular_action(const PrePoissonAlgebra& p, const PrePoissonAlgebra& dual_target) {
    if (dual_target.dim != p.dim)
        throw DimensionMismatch("coregular_action: target dimension mismatch");
    auto r = coregular_rep(p);
    return Action{p, dual_target, r.rho, r.mu, r.theta, r.gamma};
}

// (Tu) * (Tv) = T(rho(Tu)v + mu(Tv)u + lambda u * v), and the o analogue.
inline CheckReport is_relative_rb(const Mat& T, const Rat& lambda, const Action& a) {
    int n = a.source.dim, m = a.target.dim;
    if (T.rows() != n || T.cols() != m)
        throw DimensionMismatch("is_relative_rb: operator must map Q to P");
    CheckReport rep;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            Vec tu = T.col(u), tv = T.col(v);
            Vec eu = basis_vec(m, u), ev = basis_vec(m, v);

            Vec lhs = a.source.star.prod(tu, tv);
            Vec inner = operator_at(a.rho, tu).apply(ev);
            inner = vec_add(inner, operator_at(a.mu, tv).apply(eu));
            inner = vec_add(inner, vec_scale(lambda, a.target.star.prod_basis(u, v)));
            rep.require_eq("rrbo-1", {u, v}, lhs, T.apply(inner));

            lhs = a.source.circ.prod(tu, tv);
            inner = operator_at(a.theta, tu).apply(ev);
            inner = vec_add(inner, operator_at(a.gamma, tv).apply(eu));
            inner = vec_add(inner, vec_scale(lambda, a.target.circ.prod_basis(u, v)));
            rep.require_eq("rrbo-2", {u, v}, lhs, T.apply(inner));
        }
    return rep;
}

// Weight-lambda Rota-Baxter identities on a pre-Poisson algebra; the
// relative identities specialized to the regular action.
inline CheckReport is_rb_pre_poisson(const PrePoissonAlgebra& p, const Mat& B,
                                     const Rat& lambda) {
    if (B.rows() != p.dim || B.cols() != p.dim)
        throw DimensionMismatch("is_rb_pre_poisson: operator shape mismatch");
    CheckReport rep;
    int n = p.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec bi = B.col(i), bj = B.col(j);
            Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
            Vec lhs = p.star.prod(bi, bj);
            Vec inner = vec_add(p.star.prod(bi, ej), p.star.prod(ei, bj));
            inner = vec_add(inner, vec_scale(lambda, p.star.prod_basis(i, j)));
            rep.require_eq("rb-star", {i, j}, lhs, B.apply(inner));

            lhs = p.circ.prod(bi, bj);
            inner = vec_add(p.circ.prod(bi, ej), p.circ.prod(ei, bj));
            inner = vec_add(inner, vec_scale(lambda, p.circ.prod_basis(i, j)));
            rep.require_eq("rb-circ", {i, j}, lhs, B.apply(inner));
        }
    return rep;
}

} // namespace ppforge
