#pragma once

#include <tuple>

#include "ppforge/yang_baxter.hpp"

namespace ppforge {

// x *_B y = B(x)*y + x*B(y) + lambda x*y and the o analogue. B becomes a
// homomorphism from the descendent algebra back to p.
inline PrePoissonAlgebra descendent(const PrePoissonAlgebra& p, const Mat& B, const Rat& lambda) {
    if (!is_rb_pre_poisson(p, B, lambda).passed)
        throw NotRotaBaxter("descendent: B is not a Rota-Baxter operator of this weight");
    int n = p.dim;
    MultTable star(n), circ(n);
    for (int i = 0; i < n; ++i) {
        Vec bi = B.col(i);
        for (int j = 0; j < n; ++j) {
            Vec bj = B.col(j);
            Vec s = vec_add(p.star.prod(bi, basis_vec(n, j)), p.star.prod(basis_vec(n, i), bj));
            s = vec_add(s, vec_scale(lambda, p.star.prod_basis(i, j)));
            Vec c = vec_add(p.circ.prod(bi, basis_vec(n, j)), p.circ.prod(basis_vec(n, i), bj));
            c = vec_add(c, vec_scale(lambda, p.circ.prod_basis(i, j)));
            for (int k = 0; k < n; ++k) {
                star.c(i, j, k) = s[static_cast<std::size_t>(k)];
                circ.c(i, j, k) = c[static_cast<std::size_t>(k)];
            }
        }
    }
    PrePoissonAlgebra out(star, circ);
    if (!is_homomorphism(B, out, p).passed)
        throw InvalidInput("descendent: homomorphism postcondition failed");
    return out;
}

struct QuadraticRBPrePoisson {
    PrePoissonAlgebra algebra;
    Mat B;
    Rat weight;
    Mat omega;
};

struct RBSymplecticPoisson {
    PoissonAlgebra algebra;
    Mat B;
    Rat weight;
    Mat omega;
};

// Quadratic invariance, the Rota-Baxter identities, and the compatibility
// omega(Bx, y) + omega(x, By) + lambda omega(x, y) = 0.
inline CheckReport is_quadratic_rb(const QuadraticRBPrePoisson& q) {
    if (q.B.rows() != q.algebra.dim || q.omega.rows() != q.algebra.dim)
        throw DimensionMismatch("is_quadratic_rb: shape mismatch");
    CheckReport rep = is_quadratic_pre_poisson(q.algebra, q.omega);
    rep.merge(is_rb_pre_poisson(q.algebra, q.B, q.weight));
    int n = q.algebra.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
            Rat v = form_eval(q.omega, q.B.apply(ei), ej) + form_eval(q.omega, ei, q.B.apply(ej)) +
                    q.weight * q.omega(i, j);
            rep.require_eq("rb-form-compat", {i, j}, {v}, {Rat(0)});
        }
    return rep;
}

inline CheckReport is_rb_symplectic_poisson(const RBSymplecticPoisson& q) {
    if (q.B.rows() != q.algebra.dim || q.omega.rows() != q.algebra.dim)
        throw DimensionMismatch("is_rb_symplectic_poisson: shape mismatch");
    CheckReport rep = is_symplectic_poisson(q.algebra, q.omega);
    rep.merge(is_rb_poisson(q.algebra, q.B, q.weight));
    int n = q.algebra.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ei = basis_vec(n, i), ej = basis_vec(n, j);
            Rat v = form_eval(q.omega, q.B.apply(ei), ej) + form_eval(q.omega, ei, q.B.apply(ej)) +
                    q.weight * q.omega(i, j);
            rep.require_eq("rb-form-compat", {i, j}, {v}, {Rat(0)});
        }
    return rep;
}

// Sub-adjacent direction of the correspondence between quadratic
// Rota-Baxter pre-Poisson algebras and Rota-Baxter symplectic Poisson
// algebras.
inline RBSymplecticPoisson rb_symplectic_from_quadratic_rb(const QuadraticRBPrePoisson& q) {
    if (!is_quadratic_rb(q).passed)
        throw NotQuadraticRB("rb_symplectic_from_quadratic_rb: input fails the quadratic RB axioms");
    RBSymplecticPoisson out{sub_adjacent(q.algebra), q.B, q.weight, q.omega};
    if (!is_rb_symplectic_poisson(out).passed)
        throw InvalidInput("rb_symplectic_from_quadratic_rb: postcondition failed");
    return out;
}

// Converse direction: the compatible pre-Poisson products recovered from
// the symplectic form, carrying the same operator, weight and form.
inline QuadraticRBPrePoisson rb_pre_poisson_from_rb_symplectic(const RBSymplecticPoisson& q) {
    if (!is_rb_symplectic_poisson(q).passed)
        throw NotRBSymplectic("rb_pre_poisson_from_rb_symplectic: input fails the axioms");
    QuadraticRBPrePoisson out{compatible_pre_poisson(q.algebra, q.omega), q.B, q.weight, q.omega};
    if (!is_quadratic_rb(out).passed)
        throw InvalidInput("rb_pre_poisson_from_rb_symplectic: postcondition failed");
    if (!(sub_adjacent(out.algebra) == q.algebra))
        throw InvalidInput("rb_pre_poisson_from_rb_symplectic: sub-adjacent does not recover input");
    return out;
}

// B = lambda r_- I^{-1} and omega_I(x, y) = <I^{-1} x, y> on a
// factorizable r.
inline QuadraticRBPrePoisson quadratic_rb_from_factorizable(const RMatrix& rm, const Rat& lambda) {
    if (lambda == 0)
        throw ZeroWeight("quadratic_rb_from_factorizable: weight must be nonzero");
    if (!classify_r(rm).factorizable)
        throw NotFactorizable("quadratic_rb_from_factorizable: r is not factorizable");
    Mat I = i_map(rm);
    Mat I_inv = I.inverse();
    Mat B = (r_minus(rm) * I_inv).scaled(lambda);
    // <I^{-1} e_i, e_j> reads off the transpose of I^{-1}.
    Mat omega = I_inv.transpose();
    QuadraticRBPrePoisson out{rm.algebra, B, lambda, omega};
    if (!is_quadratic_rb(out).passed)
        throw InvalidInput("quadratic_rb_from_factorizable: postcondition failed");
    return out;
}

// The companion operator -lambda Id - B; an involution preserving the
// quadratic Rota-Baxter property.
inline Mat tilde_rb(const Mat& B, const Rat& lambda) {
    return -Mat::identity(B.rows()).scaled(lambda) - B;
}

// r_+ = (1/lambda)(B + lambda Id) I_omega with <I_omega^{-1} x, y> = omega(x, y).
// Recovers a factorizable r whose I equals I_omega.
inline RMatrix factorizable_from_quadratic_rb(const QuadraticRBPrePoisson& q) {
    if (q.weight == 0)
        throw ZeroWeight("factorizable_from_quadratic_rb: weight must be nonzero");
    if (!is_quadratic_rb(q).passed)
        throw NotQuadraticRB("factorizable_from_quadratic_rb: input fails the quadratic RB axioms");
    int n = q.algebra.dim;
    Mat i_omega = q.omega.transpose().inverse();
    Mat rp = ((q.B + Mat::identity(n).scaled(q.weight)) * i_omega).scaled(Rat(1) / q.weight);
    RMatrix out{q.algebra, rp.transpose()};
    if (!classify_r(out).factorizable)
        throw InvalidInput("factorizable_from_quadratic_rb: result is not factorizable");
    if (i_map(out) != i_omega)
        throw InvalidInput("factorizable_from_quadratic_rb: I does not equal I_omega");
    return out;
}

// (1/lambda) I as a pre-Poisson algebra isomorphism from (P*, *_r, o_r)
// onto the descendent of B = lambda r_- I^{-1}, and as a bialgebra
// isomorphism once P* carries the transported products
// xi *_I eta = -lambda I^{-1}((1/lambda) I xi * (1/lambda) I eta).
inline CheckReport iso_check_cor59(const RMatrix& rm, const Rat& lambda) {
    if (lambda == 0)
        throw ZeroWeight("iso_check_cor59: weight must be nonzero");
    if (!classify_r(rm).factorizable)
        throw NotFactorizable("iso_check_cor59: r is not factorizable");
    int n = rm.algebra.dim;
    Mat I = i_map(rm);
    Mat I_inv = I.inverse();
    Mat B = (r_minus(rm) * I_inv).scaled(lambda);
    Mat phi = I.scaled(Rat(1) / lambda);

    PrePoissonAlgebra dual_r = induced_products_r(rm);
    PrePoissonAlgebra desc = descendent(rm.algebra, B, lambda);

    CheckReport rep = is_homomorphism(phi, dual_r, desc);
    if (!phi.is_invertible())
        rep.add("phi-invertible", {}, {Rat(0)}, {Rat(1)});

    // Transported products on P*.
    MultTable star_I(n), circ_I(n);
    Rat inv_l = Rat(1) / lambda;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec xa = I.apply(basis_vec(n, a));
            Vec xb = I.apply(basis_vec(n, b));
            Vec vs = vec_scale(-inv_l, I_inv.apply(rm.algebra.star.prod(xa, xb)));
            Vec vc = vec_scale(-inv_l, I_inv.apply(rm.algebra.circ.prod(xa, xb)));
            for (int k = 0; k < n; ++k) {
                star_I.c(a, b, k) = vs[static_cast<std::size_t>(k)];
                circ_I.c(a, b, k) = vc[static_cast<std::size_t>(k)];
            }
        }

    // Source bialgebra (P*_r, P): products *_r, cobrackets dual to P's
    // products. Target ((P_B), (P*, *_I, o_I)).
    PrePoissonBialgebra src{dual_r, cobracket_from_table(rm.algebra.star),
                            cobracket_from_table(rm.algebra.circ)};
    PrePoissonBialgebra dst{desc, cobracket_from_table(star_I), cobracket_from_table(circ_I)};
    rep.merge(is_bialgebra_morphism(phi, src, dst), "cor59:");
    return rep;
}

// Pipeline of Cor 5.12: symplectic data -> compatible quadratic RB
// structure -> factorizable r -> induced products on P* -> double ->
// sub-adjacent Poisson algebra with the standard form. The displayed
// product formulas are recomputed directly and compared.
inline std::tuple<PoissonAlgebra, Mat, SplitDecoration>
phase_space_from_rb_symplectic(const RBSymplecticPoisson& q) {
    if (q.weight == 0)
        throw ZeroWeight("phase_space_from_rb_symplectic: weight must be nonzero");
    QuadraticRBPrePoisson quad = rb_pre_poisson_from_rb_symplectic(q);
    RMatrix rm = factorizable_from_quadratic_rb(quad);
    PrePoissonAlgebra dual = induced_products_r(rm);
    if (!is_pre_poisson(dual).passed)
        throw InvalidInput("phase_space_from_rb_symplectic: induced products fail the axioms");
    int n = q.algebra.dim;
    auto [star, circ] = double_products(quad.algebra.star, quad.algebra.circ, dual.star, dual.circ);
    MultTable dot = star.symmetrized();
    MultTable bracket = circ.antisymmetrized();

    // Direct transcription of the displayed products on P + P*.
    MultTable dot_direct(2 * n), br_direct(2 * n);
    MultTable dd = dual.star.symmetrized();
    MultTable db = dual.circ.antisymmetrized();
    MultTable pd = quad.algebra.star.symmetrized();
    MultTable pb = quad.algebra.circ.antisymmetrized();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                dot_direct.c(i, j, k) = pd.c(i, j, k);
                br_direct.c(i, j, k) = pb.c(i, j, k);
                dot_direct.c(n + i, n + j, n + k) = dd.c(i, j, k);
                br_direct.c(n + i, n + j, n + k) = db.c(i, j, k);
                // x . eta = -L*_*(x) eta (in P*) - L*_*(eta) x (in P), etc.
                dot_direct.c(i, n + j, n + k) = quad.algebra.star.c(i, k, j);
                dot_direct.c(n + j, i, n + k) = quad.algebra.star.c(i, k, j);
                dot_direct.c(i, n + j, k) = dual.star.c(j, k, i);
                dot_direct.c(n + j, i, k) = dual.star.c(j, k, i);
                br_direct.c(i, n + j, n + k) = -quad.algebra.circ.c(i, k, j);
                br_direct.c(n + j, i, n + k) = quad.algebra.circ.c(i, k, j);
                br_direct.c(n + j, i, k) = -dual.circ.c(j, k, i);
                br_direct.c(i, n + j, k) = dual.circ.c(j, k, i);
            }
    if (!(dot == dot_direct) || !(bracket == br_direct))
        throw InvalidInput("phase_space_from_rb_symplectic: displayed formulas disagree with the composed route");

    PoissonAlgebra big(dot, bracket);
    Mat w = standard_omega(n);
    if (!is_phase_space(big, SplitDecoration{n, n}, w).passed)
        throw InvalidInput("phase_space_from_rb_symplectic: result is not a phase space");
    if (!(big.dot.restrict_block(0, n) == q.algebra.dot) ||
        !(big.bracket.restrict_block(0, n) == q.algebra.bracket))
        throw InvalidInput("phase_space_from_rb_symplectic: restriction does not recover the input");
    return {big, w, SplitDecoration{n, n}};
}

} // namespace ppforge
