#pragma once

#include "ppforge/geometry.hpp"

namespace ppforge {

// Delta(e_k) stored as one coefficient matrix per basis element:
// values[k](i,j) is the coefficient of e_i (x) e_j.
struct Cobracket {
    int dim = 0;
    std::vector<Mat> values;

    static Cobracket zero(int n) {
        Cobracket c{n, {}};
        for (int k = 0; k < n; ++k) c.values.emplace_back(n, n);
        return c;
    }

    Mat at(const Vec& x) const {
        Mat m(dim, dim);
        for (int k = 0; k < dim; ++k)
            if (x[static_cast<std::size_t>(k)] != 0)
                m = m + values[static_cast<std::size_t>(k)].scaled(x[static_cast<std::size_t>(k)]);
        return m;
    }

    bool operator==(const Cobracket& o) const { return dim == o.dim && values == o.values; }
};

// Product on P* defined by <e_i* # e_j*, e_k> = <Delta(e_k), e_i* (x) e_j*>.
inline MultTable dualize_cobracket(const Cobracket& c) {
    MultTable t(c.dim);
    for (int k = 0; k < c.dim; ++k)
        for (int i = 0; i < c.dim; ++i)
            for (int j = 0; j < c.dim; ++j) t.c(i, j, k) = c.values[static_cast<std::size_t>(k)](i, j);
    return t;
}

// Inverse transposition of index roles; dualizing twice returns the
// original data.
inline Cobracket cobracket_from_table(const MultTable& t) {
    Cobracket c = Cobracket::zero(t.dim());
    for (int k = 0; k < t.dim(); ++k)
        for (int i = 0; i < t.dim(); ++i)
            for (int j = 0; j < t.dim(); ++j) c.values[static_cast<std::size_t>(k)](i, j) = t.c(i, j, k);
    return c;
}

struct PrePoissonBialgebra {
    PrePoissonAlgebra algebra;
    Cobracket delta_star; // Delta
    Cobracket delta_circ; // delta
};

namespace detail {
// (A (x) B) applied to the coefficient matrix of a 2-tensor.
inline Mat op2(const Mat& a, const Mat& m, const Mat& b) { return a * m * b.transpose(); }
} // namespace detail

// The six compatibility identities tying the cobrackets to the products.
inline CheckReport check_bialgebra_compat(const PrePoissonBialgebra& b) {
    int n = b.algebra.dim;
    if (b.delta_star.dim != n || b.delta_circ.dim != n)
        throw DimensionMismatch("check_bialgebra_compat: cobracket dimension mismatch");
    CheckReport rep;
    const MultTable& sp = b.algebra.star;
    const MultTable& cp = b.algebra.circ;
    const Cobracket& D = b.delta_star;
    const Cobracket& d = b.delta_circ;
    Mat id = Mat::identity(n);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat Li_s = sp.left_op(i), Lj_s = sp.left_op(j);
            Mat Ri_s = sp.right_op(i), Rj_s = sp.right_op(j);
            Mat Li_c = cp.left_op(i), Lj_c = cp.left_op(j);
            Mat Ri_c = cp.right_op(i), Rj_c = cp.right_op(j);
            Mat Di = D.values[static_cast<std::size_t>(i)], Dj = D.values[static_cast<std::size_t>(j)];
            Mat di = d.values[static_cast<std::size_t>(i)], dj = d.values[static_cast<std::size_t>(j)];

            // (1) delta(x*y + y*x)
            Mat lhs = d.at(vec_add(sp.prod_basis(i, j), sp.prod_basis(j, i)));
            Mat rhs = detail::op2(id, di, Lj_s + Rj_s) + detail::op2(id, dj, Li_s + Ri_s) -
                      detail::op2(Li_c, Dj, id) - detail::op2(Lj_c, Di, id);
            rep.require_eq("bialg-1", {i, j}, lhs.flatten(), rhs.flatten());

            // (2) Delta(x o y - y o x)
            lhs = D.at(vec_sub(cp.prod_basis(i, j), cp.prod_basis(j, i)));
            rhs = detail::op2(Lj_s, di, id) - detail::op2(id, di, Lj_s + Rj_s) +
                  detail::op2(Li_c, Dj, id) + detail::op2(id, Dj, Li_c - Ri_c);
            rep.require_eq("bialg-2", {i, j}, lhs.flatten(), rhs.flatten());

            // (3) (Delta + tau Delta)(x o y)
            Mat Dxy = D.at(cp.prod_basis(i, j));
            lhs = Dxy + Dxy.transpose();
            Mat Dj_sym = Dj + Dj.transpose();
            rhs = -detail::op2(id, di, Rj_s) - detail::op2(Rj_s, di.transpose(), id) +
                  detail::op2(Li_c, Dj_sym, id) + detail::op2(id, Dj_sym, Li_c);
            rep.require_eq("bialg-3", {i, j}, lhs.flatten(), rhs.flatten());

            // (4) (delta - tau delta)(x*y)
            Mat dxy = d.at(sp.prod_basis(i, j));
            lhs = dxy - dxy.transpose();
            rhs = detail::op2(id, di, Rj_s) + detail::op2(id, dj - dj.transpose(), Li_s) +
                  detail::op2(Rj_c, Di.transpose(), id) - detail::op2(Li_c, Dj_sym, id);
            rep.require_eq("bialg-4", {i, j}, lhs.flatten(), rhs.flatten());
        }

    // (5) and (6): identities in P (x) P (x) P per basis element.
    for (int k = 0; k < n; ++k) {
        const Mat& Dk = D.values[static_cast<std::size_t>(k)];
        const Mat& dk = d.values[static_cast<std::size_t>(k)];
        Tensor3 dD(n), idD_d(n), idd_D(n), D_d(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (Dk(i, j) != 0) {
                    // (delta (x) Id) Delta and (Id (x) delta) Delta
                    const Mat& di = d.values[static_cast<std::size_t>(i)];
                    const Mat& dj = d.values[static_cast<std::size_t>(j)];
                    for (int a = 0; a < n; ++a)
                        for (int c = 0; c < n; ++c) {
                            if (di(a, c) != 0) dD.at(a, c, j) += Dk(i, j) * di(a, c);
                            if (dj(a, c) != 0) idd_D.at(i, a, c) += Dk(i, j) * dj(a, c);
                        }
                }
                if (dk(i, j) != 0) {
                    // (Id (x) Delta) delta and (Delta (x) Id) delta
                    const Mat& Dj = D.values[static_cast<std::size_t>(j)];
                    const Mat& Di = D.values[static_cast<std::size_t>(i)];
                    for (int a = 0; a < n; ++a)
                        for (int c = 0; c < n; ++c) {
                            if (Dj(a, c) != 0) idD_d.at(i, a, c) += dk(i, j) * Dj(a, c);
                            if (Di(a, c) != 0) D_d.at(a, c, j) += dk(i, j) * Di(a, c);
                        }
                }
            }
        auto swap12 = [&](const Tensor3& t) {
            Tensor3 r(n);
            for (int a = 0; a < n; ++a)
                for (int bb = 0; bb < n; ++bb)
                    for (int cc = 0; cc < n; ++cc) r.at(a, bb, cc) = t.at(bb, a, cc);
            return r;
        };
        Tensor3 five = dD - swap12(dD) - idD_d + swap12(idd_D);
        rep.require_eq("bialg-5", {k}, five.flatten(), Tensor3(n).flatten());
        Tensor3 six = D_d + swap12(D_d) - idd_D - swap12(idd_D);
        rep.require_eq("bialg-6", {k}, six.flatten(), Tensor3(n).flatten());
    }
    return rep;
}

// Mixed products on P + P* generated from the pre-Poisson structures on P
// (tables sp, cp) and on P* (tables sd, cd), with the starred operators
// expanded as signed transposes. Basis order: (e_1..e_n, f_1..f_n).
inline std::pair<MultTable, MultTable> double_products(const MultTable& sp, const MultTable& cp,
                                                       const MultTable& sd, const MultTable& cd) {
    int n = sp.dim();
    MultTable star(2 * n), circ(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                star.c(i, j, k) = sp.c(i, j, k);
                circ.c(i, j, k) = cp.c(i, j, k);
                star.c(n + i, n + j, n + k) = sd.c(i, j, k);
                circ.c(n + i, n + j, n + k) = cd.c(i, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k) {
                // e_i * f_b: P-part through -R*_sd(f_b), P*-part through
                // -(L*_sp + R*_sp)(e_i), starred maps expanded as signed
                // transposes.
                star.c(i, n + b, k) = -sd.c(k, b, i);
                star.c(i, n + b, n + k) = sp.c(i, k, b) + sp.c(k, i, b);
                // f_b * e_i
                star.c(n + b, i, k) = sd.c(b, k, i) + sd.c(k, b, i);
                star.c(n + b, i, n + k) = -sp.c(k, i, b);
                // e_i o f_b
                circ.c(i, n + b, k) = cd.c(k, b, i);
                circ.c(i, n + b, n + k) = -cp.c(i, k, b) + cp.c(k, i, b);
                // f_b o e_i
                circ.c(n + b, i, k) = -cd.c(b, k, i) + cd.c(k, b, i);
                circ.c(n + b, i, n + k) = cp.c(k, i, b);
            }
    return {star, circ};
}

// Verifies the bialgebra through three routes: the primal algebra axioms,
// the dualized cobracket axioms on P*, the six compatibility identities,
// and the Manin triple property of the double with the standard form.
inline CheckReport is_pre_poisson_bialgebra(const PrePoissonBialgebra& b) {
    int n = b.algebra.dim;
    if (b.delta_star.dim != n || b.delta_circ.dim != n)
        throw DimensionMismatch("is_pre_poisson_bialgebra: cobracket dimension mismatch");
    CheckReport rep;
    rep.merge(is_pre_poisson(b.algebra), "primal:");
    MultTable sd = dualize_cobracket(b.delta_star);
    MultTable cd = dualize_cobracket(b.delta_circ);
    rep.merge(is_pre_poisson(sd, cd), "dual:");
    rep.merge(check_bialgebra_compat(b));
    auto [star, circ] = double_products(b.algebra.star, b.algebra.circ, sd, cd);
    PrePoissonAlgebra dbl = PrePoissonAlgebra::unchecked(star, circ);
    rep.merge(is_manin_triple(dbl, SplitDecoration{n, n}, standard_omega(n)), "double:");
    return rep;
}

struct DoubleResult {
    PrePoissonAlgebra algebra;
    Mat omega;
    SplitDecoration split;
};

inline DoubleResult double_of_bialgebra(const PrePoissonBialgebra& b) {
    if (!is_pre_poisson_bialgebra(b).passed)
        throw NotABialgebra("double_of_bialgebra: input is not a pre-Poisson bialgebra");
    int n = b.algebra.dim;
    auto [star, circ] = double_products(b.algebra.star, b.algebra.circ,
                                        dualize_cobracket(b.delta_star),
                                        dualize_cobracket(b.delta_circ));
    return DoubleResult{PrePoissonAlgebra(star, circ), standard_omega(n),
                        SplitDecoration{n, n}};
}

// Swaps the roles of products and cobrackets across the pairing.
inline PrePoissonBialgebra dual_bialgebra(const PrePoissonBialgebra& b) {
    if (!is_pre_poisson_bialgebra(b).passed)
        throw NotABialgebra("dual_bialgebra: input is not a pre-Poisson bialgebra");
    PrePoissonBialgebra out{
        PrePoissonAlgebra(dualize_cobracket(b.delta_star), dualize_cobracket(b.delta_circ)),
        cobracket_from_table(b.algebra.star), cobracket_from_table(b.algebra.circ)};
    if (!is_pre_poisson_bialgebra(out).passed)
        throw NotABialgebra("dual_bialgebra: dual fails the bialgebra conditions");
    return out;
}

// phi is an algebra homomorphism and intertwines both cobrackets:
// (phi (x) phi) Delta_src = Delta_dst phi.
inline CheckReport is_bialgebra_morphism(const Mat& phi, const PrePoissonBialgebra& src,
                                         const PrePoissonBialgebra& dst) {
    if (phi.cols() != src.algebra.dim || phi.rows() != dst.algebra.dim)
        throw DimensionMismatch("is_bialgebra_morphism: map shape mismatch");
    CheckReport rep = is_homomorphism(phi, src.algebra, dst.algebra);
    for (int k = 0; k < src.algebra.dim; ++k) {
        Mat lhs = phi * src.delta_star.values[static_cast<std::size_t>(k)] * phi.transpose();
        Mat rhs = dst.delta_star.at(phi.col(k));
        rep.require_eq("morphism-delta-star", {k}, lhs.flatten(), rhs.flatten());
        lhs = phi * src.delta_circ.values[static_cast<std::size_t>(k)] * phi.transpose();
        rhs = dst.delta_circ.at(phi.col(k));
        rep.require_eq("morphism-delta-circ", {k}, lhs.flatten(), rhs.flatten());
    }
    return rep;
}

} // namespace ppforge
