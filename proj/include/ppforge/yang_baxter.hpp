#pragma once

#include <array>

#include "ppforge/bialgebra.hpp"

namespace ppforge {

// A 2-tensor r on a pre-Poisson algebra; r(i,j) is the coefficient of
// e_i (x) e_j.
struct RMatrix {
    PrePoissonAlgebra algebra;
    Mat r;
};

namespace detail {
inline void require_rmatrix(const RMatrix& rm) {
    if (rm.r.rows() != rm.algebra.dim || rm.r.cols() != rm.algebra.dim)
        throw DimensionMismatch("r-matrix dimension does not match the algebra");
}
} // namespace detail

// <r_+(xi), eta> = r(xi, eta) = <xi, r_-(eta)>. With e_i* identified with
// e_i, r_+ is the transpose of the coefficient matrix and r_- the matrix
// itself.
inline Mat r_plus(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    return rm.r.transpose();
}

inline Mat r_minus(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    return rm.r;
}

// I = r_+ - r_-; I* = -I, and (1/2) I is the contraction of the
// skew-symmetric part of r.
inline Mat i_map(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    return rm.r.transpose() - rm.r;
}

// Delta(x) = (Id (x) (L_* + R_*)(x) - L_*(x) (x) Id) r
// delta(x) = (L_o(x) (x) Id + Id (x) (L_o - R_o)(x)) r
inline std::pair<Cobracket, Cobracket> coboundary_cobrackets(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    int n = rm.algebra.dim;
    Cobracket D = Cobracket::zero(n), d = Cobracket::zero(n);
    for (int x = 0; x < n; ++x) {
        Mat Ls = rm.algebra.star.left_op(x), Rs = rm.algebra.star.right_op(x);
        Mat Lc = rm.algebra.circ.left_op(x), Rc = rm.algebra.circ.right_op(x);
        D.values[static_cast<std::size_t>(x)] = rm.r * (Ls + Rs).transpose() - Ls * rm.r;
        d.values[static_cast<std::size_t>(x)] = Lc * rm.r + rm.r * (Lc - Rc).transpose();
    }
    return {D, d};
}

// Z(r) = -r13*r12 - r23*r21 + r13.r21 + r12.r23 - r13.r23, where each
// binary term multiplies the legs sharing a common slot and leaves the
// other legs in place, and . is the sub-adjacent commutative product.
inline Tensor3 zinbiel_ybe(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    int n = rm.algebra.dim;
    const Mat& R = rm.r;
    const MultTable& sp = rm.algebra.star;
    MultTable dot = sp.symmetrized();
    Tensor3 z(n);
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
            if (R(k, p) == 0) continue;
            for (int l = 0; l < n; ++l)
                for (int q = 0; q < n; ++q) {
                    if (R(l, q) == 0) continue;
                    Rat f = R(k, p) * R(l, q);
                    for (int m = 0; m < n; ++m) {
                        if (sp.c(k, l, m) != 0) {
                            z.at(m, q, p) -= f * sp.c(k, l, m); // r13 * r12
                            z.at(q, m, p) -= f * sp.c(k, l, m); // r23 * r21
                        }
                        if (dot.c(k, q, m) != 0) z.at(m, l, p) += f * dot.c(k, q, m); // r13 . r21
                        if (dot.c(p, l, m) != 0) z.at(k, m, q) += f * dot.c(p, l, m); // r12 . r23
                        if (dot.c(p, q, m) != 0) z.at(k, l, m) -= f * dot.c(p, q, m); // r13 . r23
                    }
                }
        }
    return z;
}

// S(r) for r = sum_i a_i (x) b_i, with [,] the sub-adjacent Lie bracket:
//   S(r) =   sum (a_i o a_j) (x) b_j (x) b_i      (r13 o r12)
//          - sum b_j (x) (a_i o a_j) (x) b_i      (r23 o r21)
//          + sum a_j (x) [a_i, b_j] (x) b_i       (bracket term, shared slot 2)
//          - sum [a_i, b_j] (x) a_j (x) b_i       ([r13, r21])
//          - sum a_i (x) a_j (x) [b_i, b_j]       ([r13, r23])
// The leg pairing of the third term is pinned by the canonical-r oracle on
// doubles: the literal r21 pairing breaks S(r) = 0 there and is rejected.
inline Tensor3 s_equation(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    int n = rm.algebra.dim;
    const Mat& R = rm.r;
    const MultTable& cp = rm.algebra.circ;
    MultTable br = cp.antisymmetrized();
    Tensor3 s(n);
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p) {
            if (R(k, p) == 0) continue;
            for (int l = 0; l < n; ++l)
                for (int q = 0; q < n; ++q) {
                    if (R(l, q) == 0) continue;
                    Rat f = R(k, p) * R(l, q);
                    for (int m = 0; m < n; ++m) {
                        if (cp.c(k, l, m) != 0) {
                            s.at(m, q, p) += f * cp.c(k, l, m); // r13 o r12
                            s.at(q, m, p) -= f * cp.c(k, l, m); // r23 o r21
                        }
                        if (br.c(k, q, m) != 0) {
                            s.at(l, m, p) += f * br.c(k, q, m); // [r23, r12]
                            s.at(m, l, p) -= f * br.c(k, q, m); // [r13, r21]
                        }
                        if (br.c(p, q, m) != 0) s.at(k, l, m) -= f * br.c(p, q, m); // [r13, r23]
                    }
                }
        }
    return s;
}

// (L,R)-invariance of r:
//   (L_*(x) (x) Id - Id (x) (L_* + R_*)(x)) r = 0
//   (L_o(x) (x) Id + Id (x) (L_o - R_o)(x)) r = 0
// The r_+ reformulation is evaluated alongside and must agree; the
// I-intertwining reformulation characterizes invariance of the skew part,
// so it is evaluated and compared only when r is its own skew part.
inline CheckReport is_lr_invariant(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    CheckReport rep;
    CheckReport lem;
    CheckReport imap_rep;
    int n = rm.algebra.dim;
    const Mat& R = rm.r;
    Mat rp = R.transpose();
    Mat I = R.transpose() - R;
    for (int x = 0; x < n; ++x) {
        Mat Ls = rm.algebra.star.left_op(x), Rs = rm.algebra.star.right_op(x);
        Mat Lc = rm.algebra.circ.left_op(x), Rc = rm.algebra.circ.right_op(x);

        Mat m1 = Ls * R - R * (Ls + Rs).transpose();
        rep.require_eq("lr-star", {x}, m1.flatten(), Mat(n, n).flatten());
        Mat m2 = Lc * R + R * (Lc - Rc).transpose();
        rep.require_eq("lr-circ", {x}, m2.flatten(), Mat(n, n).flatten());

        Mat l1 = rp * (-Ls.transpose()) + (Ls + Rs) * rp;
        lem.require_eq("lr-star-rplus", {x}, l1.flatten(), Mat(n, n).flatten());
        Mat l2 = rp * (-Lc.transpose()) - (Lc - Rc) * rp;
        lem.require_eq("lr-circ-rplus", {x}, l2.flatten(), Mat(n, n).flatten());

        Mat i1 = I * (-Ls.transpose()) + (Ls + Rs) * I;
        imap_rep.require_eq("lr-star-imap", {x}, i1.flatten(), Mat(n, n).flatten());
        Mat i2 = I * (-Lc.transpose()) - (Lc - Rc) * I;
        imap_rep.require_eq("lr-circ-imap", {x}, i2.flatten(), Mat(n, n).flatten());
    }
    if (rep.passed != lem.passed)
        throw std::logic_error("is_lr_invariant: the r_+ reformulation disagrees");
    if (R == -R.transpose() && rep.passed != imap_rep.passed)
        throw std::logic_error("is_lr_invariant: the I-map reformulation disagrees on skew input");
    rep.merge(lem);
    return rep;
}

// The eight conditions under which the coboundary cobrackets of r induce
// a pre-Poisson bialgebra: the Zinbiel and pre-Lie coboundary conditions
// plus the four mixed conditions. Condition (iv) is evaluated through its
// equivalent partner identity on the induced cobrackets; the displayed
// operator form fails on quasi-triangular instances (see prop43_identities)
// and is rejected by the oracle.
inline CheckReport check_coboundary_conditions(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    CheckReport rep;
    int n = rm.algebra.dim;
    const MultTable& sp = rm.algebra.star;
    const MultTable& cp = rm.algebra.circ;
    const Mat& R = rm.r;
    Mat D = R - R.transpose();
    Tensor3 Z = zinbiel_ybe(rm);
    Tensor3 S = s_equation(rm);
    Mat zero(n, n);
    Tensor3 zero3(n);
    auto [cbD, cbd] = coboundary_cobrackets(rm);

    for (int x = 0; x < n; ++x) {
        Mat Ls_x = sp.left_op(x), Rs_x = sp.right_op(x);
        Mat Lc_x = cp.left_op(x), Rc_x = cp.right_op(x);

        Tensor3 cz2 = Z.apply_on_leg(Ls_x, 0) - Z.apply_on_leg(Ls_x + Rs_x, 2);
        rep.require_eq("cobound-zinbiel-2", {x}, cz2.flatten(), zero3.flatten());

        Tensor3 cpl2 = S.apply_on_leg(Lc_x, 0) + S.apply_on_leg(Lc_x, 1) +
                       S.apply_on_leg(Lc_x - Rc_x, 2);
        rep.require_eq("cobound-pre-lie-2", {x}, cpl2.flatten(), zero3.flatten());

        // (i): tensor terms in Z and S plus the sum over r-legs.
        Tensor3 ci = Z.apply_on_leg(Lc_x, 0) + S.apply_on_leg(Ls_x + Rs_x, 2) -
                     S.apply_on_leg(Ls_x, 1);
        Tensor3 cii = Z.apply_on_leg(Lc_x - Rc_x, 2) + S.apply_on_leg(Ls_x, 0) +
                      S.apply_on_leg(Ls_x, 1);
        for (int k = 0; k < n; ++k) {
            Vec tail = zero_vec(n);
            bool any = false;
            for (int l = 0; l < n; ++l)
                if (R(k, l) != 0) {
                    tail[static_cast<std::size_t>(l)] = R(k, l);
                    any = true;
                }
            if (!any) continue;
            Mat Ls_a = sp.left_op(k), Lc_a = cp.left_op(k);
            Mat Lc_xa = cp.left_op(sp.prod_basis(x, k));
            Mat Ls_xa = sp.left_op(cp.prod_basis(x, k));
            Mat mi = Lc_x * Ls_a * D - Lc_xa * D - Lc_x * D * Ls_a.transpose() +
                     Lc_a * D * Ls_x.transpose() - D * Lc_xa.transpose() +
                     D * (Ls_x * Lc_a).transpose();
            accumulate_mat_otimes_vec(ci, mi, tail);
            Mat mii = Ls_x * Lc_a * D - Ls_xa * D - Ls_x * D * Lc_a.transpose() -
                      Lc_a * D * Ls_x.transpose() + D * Ls_xa.transpose() -
                      D * (Ls_x * Lc_a).transpose();
            accumulate_mat_otimes_vec(cii, mii, tail);
        }
        rep.require_eq("cobound-i", {x}, ci.flatten(), zero3.flatten());
        rep.require_eq("cobound-ii", {x}, cii.flatten(), zero3.flatten());
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Mat Ls_x = sp.left_op(x), Ls_y = sp.left_op(y);
            Mat Lc_x = cp.left_op(x), Lc_y = cp.left_op(y);
            Mat Ls_xy = sp.left_op(sp.prod_basis(x, y));
            Mat Lc_xy = cp.left_op(cp.prod_basis(x, y));
            Mat Ls_cxy = sp.left_op(cp.prod_basis(x, y));
            Mat Lc_sxy = cp.left_op(sp.prod_basis(x, y));

            Mat cz1 = Ls_xy * D - D * Ls_xy.transpose() - Ls_x * Ls_y * D +
                      Ls_x * D * Ls_y.transpose();
            rep.require_eq("cobound-zinbiel-1", {x, y}, cz1.flatten(), zero.flatten());

            Mat cpl1 = Lc_xy * D + D * Lc_xy.transpose() - Lc_x * Lc_y * D -
                       Lc_x * D * Lc_y.transpose() - Lc_y * D * Lc_x.transpose() -
                       D * (Lc_x * Lc_y).transpose();
            rep.require_eq("cobound-pre-lie-1", {x, y}, cpl1.flatten(), zero.flatten());

            Mat ciii = Ls_y * D * Lc_x.transpose() - Lc_x * D * Ls_y.transpose() +
                       D * Ls_cxy.transpose() - Ls_cxy * D + Lc_x * Ls_y * D -
                       D * (Lc_x * Ls_y).transpose();
            rep.require_eq("cobound-iii", {x, y}, ciii.flatten(), zero.flatten());

            // (iv) via the (delta - tau delta)(x*y) identity on the induced
            // cobrackets.
            Mat Rs_y = sp.right_op(y), Rc_y = cp.right_op(y);
            const Mat& Dx = cbD.values[static_cast<std::size_t>(x)];
            const Mat& Dy = cbD.values[static_cast<std::size_t>(y)];
            const Mat& dx = cbd.values[static_cast<std::size_t>(x)];
            const Mat& dy = cbd.values[static_cast<std::size_t>(y)];
            Mat dsxy = cbd.at(sp.prod_basis(x, y));
            Mat civ = (dsxy - dsxy.transpose()) - dx * Rs_y.transpose() -
                      (dy - dy.transpose()) * Ls_x.transpose() - Rc_y * Dx.transpose() +
                      Lc_x * (Dy + Dy.transpose());
            rep.require_eq("cobound-iv", {x, y}, civ.flatten(), zero.flatten());
        }
    return rep;
}

// The four operator identities displayed alongside the invariance
// proposition, evaluated verbatim on the skew part a and on r - tau(r).
// The first three hold whenever a is (L,R)-invariant; the fourth fails on
// such instances as printed (its role in the coboundary theorem is played
// by the cobracket identity inside check_coboundary_conditions), so
// callers treat the fourth as diagnostic only.
inline std::array<bool, 4> prop43_identities(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    int n = rm.algebra.dim;
    const MultTable& sp = rm.algebra.star;
    const MultTable& cp = rm.algebra.circ;
    Mat D = rm.r - rm.r.transpose();
    Mat A = skew_part(rm.r);
    std::array<bool, 4> ok{true, true, true, true};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Mat Ls_x = sp.left_op(x), Ls_y = sp.left_op(y);
            Mat Lc_x = cp.left_op(x), Lc_y = cp.left_op(y);
            Mat Lc_sxy = cp.left_op(sp.prod_basis(x, y));
            Mat Ls_cxy = sp.left_op(cp.prod_basis(x, y));
            Mat Lc_cxy = cp.left_op(cp.prod_basis(x, y));
            Mat m1 = Lc_x * Ls_y * A - Lc_sxy * A - Lc_x * A * Ls_y.transpose() +
                     Lc_y * A * Ls_x.transpose() - A * Lc_sxy.transpose() +
                     A * (Ls_x * Lc_y).transpose();
            if (!m1.is_zero()) ok[0] = false;
            Mat m2 = Ls_x * Lc_y * A - Ls_cxy * A - Ls_x * A * Lc_y.transpose() -
                     Lc_y * A * Ls_x.transpose() + A * Ls_cxy.transpose() -
                     A * (Ls_x * Lc_y).transpose();
            if (!m2.is_zero()) ok[1] = false;
            Mat m3 = Ls_y * D * Lc_x.transpose() - Lc_x * D * Ls_y.transpose() +
                     D * Ls_cxy.transpose() - Ls_cxy * D + Lc_x * Ls_y * D -
                     D * (Lc_x * Ls_y).transpose();
            if (!m3.is_zero()) ok[2] = false;
            Mat m4 = Lc_x * D * Ls_y.transpose() - Lc_y * D * Ls_x.transpose() + Lc_cxy * D -
                     Lc_x * Ls_y * D + D * Lc_sxy.transpose() -
                     D * (Ls_x * Lc_y).transpose();
            if (!m4.is_zero()) ok[3] = false;
        }
    return ok;
}

struct RClassification {
    bool coboundary_valid = false;
    bool lr_invariant_skew_part = false;
    bool ybe_solved = false;
    bool quasi_triangular = false;
    bool triangular = false;
    bool factorizable = false;
    int z_support = 0;
    int s_support = 0;
};

inline RClassification classify_r(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    RClassification c;
    Tensor3 Z = zinbiel_ybe(rm);
    Tensor3 S = s_equation(rm);
    c.z_support = Z.support();
    c.s_support = S.support();
    c.ybe_solved = Z.is_zero() && S.is_zero();
    RMatrix skew{rm.algebra, skew_part(rm.r)};
    c.lr_invariant_skew_part = is_lr_invariant(skew).passed;
    c.quasi_triangular = c.ybe_solved && c.lr_invariant_skew_part;
    c.triangular = c.quasi_triangular && rm.r == rm.r.transpose();
    c.factorizable = c.quasi_triangular && i_map(rm).is_invertible();
    c.coboundary_valid = check_coboundary_conditions(rm).passed;
    return c;
}

// xi *_r eta = -(L*_* + R*_*)(r_+ xi) eta + R*_*(r_- eta) xi
// xi o_r eta = (L*_o - R*_o)(r_+ xi) eta - R*_o(r_- eta) xi
// Validity is asserted downstream; quasi-triangular r yields a pre-Poisson
// algebra with r_+ and r_- homomorphisms into P.
inline PrePoissonAlgebra induced_products_r(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    int n = rm.algebra.dim;
    Mat rp = r_plus(rm), rmn = r_minus(rm);
    MultTable star(n), circ(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ea = basis_vec(n, a), eb = basis_vec(n, b);
            Vec rpa = rp.apply(ea), rmb = rmn.apply(eb);
            // -(L*+R*) starred becomes +(L+R)^T; R starred becomes -R^T.
            Mat Ls = rm.algebra.star.left_op(rpa), Rs = rm.algebra.star.right_op(rpa);
            Mat Rs_m = rm.algebra.star.right_op(rmb);
            Vec vs = vec_add((Ls + Rs).transpose().apply(eb), vec_scale(-1, Rs_m.transpose().apply(ea)));
            Mat Lc = rm.algebra.circ.left_op(rpa), Rc = rm.algebra.circ.right_op(rpa);
            Mat Rc_m = rm.algebra.circ.right_op(rmb);
            Vec vc = vec_add(vec_scale(-1, (Lc - Rc).transpose().apply(eb)),
                             Rc_m.transpose().apply(ea));
            for (int k = 0; k < n; ++k) {
                star.c(a, b, k) = vs[static_cast<std::size_t>(k)];
                circ.c(a, b, k) = vc[static_cast<std::size_t>(k)];
            }
        }
    return PrePoissonAlgebra::unchecked(star, circ);
}

// xi *_+ eta = -R*_*(I eta) xi,  xi o_+ eta = R*_o(I eta) xi.
inline PrePoissonAlgebra induced_plus(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    RMatrix skew{rm.algebra, skew_part(rm.r)};
    if (!is_lr_invariant(skew).passed)
        throw NotLRInvariant("induced_plus: the skew part of r is not (L,R)-invariant");
    int n = rm.algebra.dim;
    Mat I = i_map(rm);
    MultTable star(n), circ(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ia = I.apply(basis_vec(n, b));
            Vec vs = rm.algebra.star.right_op(ia).transpose().apply(basis_vec(n, a));
            Vec vc = vec_scale(-1, rm.algebra.circ.right_op(ia).transpose().apply(basis_vec(n, a)));
            for (int k = 0; k < n; ++k) {
                star.c(a, b, k) = vs[static_cast<std::size_t>(k)];
                circ.c(a, b, k) = vc[static_cast<std::size_t>(k)];
            }
        }
    PrePoissonAlgebra out = PrePoissonAlgebra::unchecked(star, circ);
    if (!is_pre_poisson(out).passed)
        throw InvalidInput("induced_plus: result fails the pre-Poisson axioms");
    return out;
}

// xi *_- eta = -(L*_* + R*_*)(I xi) eta,  xi o_- eta = (L*_o - R*_o)(I xi) eta.
inline PrePoissonAlgebra induced_minus(const RMatrix& rm) {
    detail::require_rmatrix(rm);
    RMatrix skew{rm.algebra, skew_part(rm.r)};
    if (!is_lr_invariant(skew).passed)
        throw NotLRInvariant("induced_minus: the skew part of r is not (L,R)-invariant");
    int n = rm.algebra.dim;
    Mat I = i_map(rm);
    MultTable star(n), circ(n);
    for (int a = 0; a < n; ++a) {
        Vec ia = I.apply(basis_vec(n, a));
        Mat Ls = rm.algebra.star.left_op(ia), Rs = rm.algebra.star.right_op(ia);
        Mat Lc = rm.algebra.circ.left_op(ia), Rc = rm.algebra.circ.right_op(ia);
        for (int b = 0; b < n; ++b) {
            Vec vs = (Ls + Rs).transpose().apply(basis_vec(n, b));
            Vec vc = vec_scale(-1, (Lc - Rc).transpose().apply(basis_vec(n, b)));
            for (int k = 0; k < n; ++k) {
                star.c(a, b, k) = vs[static_cast<std::size_t>(k)];
                circ.c(a, b, k) = vc[static_cast<std::size_t>(k)];
            }
        }
    }
    PrePoissonAlgebra out = PrePoissonAlgebra::unchecked(star, circ);
    if (!is_pre_poisson(out).passed)
        throw InvalidInput("induced_minus: result fails the pre-Poisson axioms");
    return out;
}

// Unique decomposition x = x_+ - x_- with x_+ = r_+ I^{-1} x and
// x_- = r_- I^{-1} x.
inline std::pair<Vec, Vec> factorize(const RMatrix& rm, const Vec& x) {
    detail::require_rmatrix(rm);
    if (static_cast<int>(x.size()) != rm.algebra.dim)
        throw DimensionMismatch("factorize: vector dimension mismatch");
    if (!classify_r(rm).factorizable)
        throw NotFactorizable("factorize: r is not factorizable");
    Mat I_inv = i_map(rm).inverse();
    Vec xi = I_inv.apply(x);
    return {r_plus(rm).apply(xi), r_minus(rm).apply(xi)};
}

// r = sum_i e_i (x) e_i^* on a 2n-dimensional double in block basis.
inline Mat canonical_double_r(int n) {
    Mat r(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) r(i, n + i) = 1;
    return r;
}

} // namespace ppforge
