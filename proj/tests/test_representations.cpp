#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ppforge/catalog.hpp"
#include "ppforge/representations.hpp"

using namespace ppforge;

TEST_CASE("is_poisson_rep basics") {
    PoissonAlgebra zero = sub_adjacent(catalog::zero_algebra(2));
    PoissonRep zr{zero, 2, {Mat(2, 2), Mat(2, 2)}, {Mat(2, 2), Mat(2, 2)}};
    CHECK(is_poisson_rep(zr).passed);

    // regular rep of the sub-adjacent Poisson algebra of (Z2, 0):
    // Lie part ad = 0, associative part = left multiplication
    PoissonAlgebra p = sub_adjacent(catalog::z2());
    CHECK(is_poisson_rep(poisson_regular_rep(p)).passed);

    // constant-identity sigma is not an algebra map on a nonzero algebra
    PoissonRep bad{p, 2, {Mat(2, 2), Mat(2, 2)}, {Mat::identity(2), Mat::identity(2)}};
    CheckReport rep = is_poisson_rep(bad);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has("assoc-rep"));
}

TEST_CASE("regular representation matrices and validity") {
    // L*(e1) of Z2 sends e1 to e2
    PrePoissonRep r = regular_rep(catalog::z2());
    CHECK(r.rho[0](1, 0) == 1);
    CHECK(r.rho[0](0, 0) == 0);
    CHECK(r.rho[1].is_zero());
    CHECK(r.theta[0].is_zero());

    // PL2: L_o(e1): e2 -> e2 and R_o(e2): e1 -> e2
    PrePoissonRep rp = regular_rep(catalog::pl2());
    CHECK(rp.theta[0](1, 1) == 1);
    CHECK(rp.gamma[1](1, 0) == 1);

    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        CHECK(is_pre_poisson_rep(regular_rep(p)).passed);
    }

    PrePoissonRep zero_rep{catalog::pp3(), 2, {}, {}, {}, {}};
    for (int i = 0; i < 3; ++i) {
        zero_rep.rho.emplace_back(2, 2);
        zero_rep.mu.emplace_back(2, 2);
        zero_rep.theta.emplace_back(2, 2);
        zero_rep.gamma.emplace_back(2, 2);
    }
    CHECK(is_pre_poisson_rep(zero_rep).passed);

    // swapping rho and mu of the regular rep of Z2 breaks the rep laws
    PrePoissonRep swapped = regular_rep(catalog::z2());
    std::swap(swapped.rho, swapped.mu);
    CHECK_FALSE(is_pre_poisson_rep(swapped).passed);
}

TEST_CASE("dual representation (Prop 2.10)") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        PrePoissonRep reg = regular_rep(p);
        PrePoissonRep dual = dual_rep(reg);
        CHECK(is_pre_poisson_rep(dual).passed);

        // dual of the regular rep is the coregular rep, entrywise
        PrePoissonRep coreg = coregular_rep(p);
        CHECK(dual.rho == coreg.rho);
        CHECK(dual.mu == coreg.mu);
        CHECK(dual.theta == coreg.theta);
        CHECK(dual.gamma == coreg.gamma);

        // double dual is the original under the canonical identification
        PrePoissonRep dd = dual_rep(dual);
        CHECK(dd.rho == reg.rho);
        CHECK(dd.mu == reg.mu);
        CHECK(dd.theta == reg.theta);
        CHECK(dd.gamma == reg.gamma);

        // first dual map is -L*^T - R*^T
        for (int i = 0; i < p.dim; ++i)
            CHECK(dual.rho[i] == p.star.left_op(i).transpose() + p.star.right_op(i).transpose());
    }
}

TEST_CASE("coregular pairing identities") {
    // <L**(e1) e2*, e1> = -<e2*, e1*e1> = -1 on Z2
    PrePoissonRep coreg = coregular_rep(catalog::z2());
    // rho = -L* - R* starred; the pure starred L alone:
    Mat Lstar_starred = -catalog::z2().star.left_op(0).transpose();
    CHECK(Lstar_starred(0, 1) == -1);

    // pairing identities for all four starred maps on every catalog algebra
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        for (int x = 0; x < p.dim; ++x)
            for (int a = 0; a < p.dim; ++a)
                for (int y = 0; y < p.dim; ++y) {
                    Vec ea = basis_vec(p.dim, a);
                    // <L**(x) e_a, e_y> = -<e_a, x*e_y>
                    CHECK((-p.star.left_op(x).transpose()).apply(ea)[y] ==
                          -p.star.prod_basis(x, y)[a]);
                    CHECK((-p.star.right_op(x).transpose()).apply(ea)[y] ==
                          -p.star.prod_basis(y, x)[a]);
                    CHECK((-p.circ.left_op(x).transpose()).apply(ea)[y] ==
                          -p.circ.prod_basis(x, y)[a]);
                    CHECK((-p.circ.right_op(x).transpose()).apply(ea)[y] ==
                          -p.circ.prod_basis(y, x)[a]);
                }
    }
}

TEST_CASE("semidirect products and the iff characterization") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        PrePoissonRep reg = regular_rep(p);
        CHECK(is_pre_poisson(semidirect_pre_poisson(p, reg)).passed);
        PrePoissonRep coreg = coregular_rep(p);
        CHECK(is_pre_poisson(semidirect_pre_poisson(p, coreg)).passed);

        // iff: mutate one operator entry; the rep check and the semidirect
        // axiom check must agree
        std::mt19937 rng(606 + p.dim);
        for (int t = 0; t < 12; ++t) {
            PrePoissonRep mut = reg;
            int which = static_cast<int>(rng() % 4);
            std::vector<Mat>* maps = which == 0   ? &mut.rho
                                     : which == 1 ? &mut.mu
                                     : which == 2 ? &mut.theta
                                                  : &mut.gamma;
            (*maps)[rng() % p.dim](static_cast<int>(rng() % p.dim),
                                   static_cast<int>(rng() % p.dim)) += 1;
            bool rep_ok = is_pre_poisson_rep(mut).passed;
            auto [star, circ] = semidirect_pre_poisson_tables(p, mut);
            bool alg_ok = is_pre_poisson(star, circ).passed;
            CHECK(rep_ok == alg_ok);
        }
    }
}

TEST_CASE("semidirect poisson cases") {
    // zero rep: direct sum with V squaring to zero
    PoissonAlgebra p = sub_adjacent(catalog::pp3());
    PoissonRep zero{p, 2, std::vector<Mat>(3, Mat(2, 2)), std::vector<Mat>(3, Mat(2, 2))};
    PoissonAlgebra sd = semidirect_poisson(p, zero);
    CHECK(sd.dim == 5);
    CHECK(sd.dot.block_closed(0, 3));
    CHECK(sd.dot.restrict_block(3, 2).is_zero());

    // dimV = 0 reproduces p
    PoissonRep empty{p, 0, std::vector<Mat>(3, Mat(0, 0)), std::vector<Mat>(3, Mat(0, 0))};
    CHECK(semidirect_poisson(p, empty) == p);

    // Poisson dual rep of the (L_*, L_o) rep gives a 4-dim Poisson algebra
    PoissonRep dual = poisson_dual_rep(left_mult_poisson_rep(catalog::z2()));
    CHECK(is_poisson_rep(dual).passed);
    CHECK(semidirect_poisson(sub_adjacent(catalog::z2()), dual).dim == 4);

    // Poisson coregular data (dual of the regular rep) also works
    PoissonRep coreg = poisson_dual_rep(poisson_regular_rep(sub_adjacent(catalog::z2())));
    CHECK(is_poisson_rep(coreg).passed);
    CHECK(is_poisson(semidirect_poisson(sub_adjacent(catalog::z2()), coreg)).passed);
}

TEST_CASE("is_action on regular actions and degenerate targets") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        CHECK(is_action(regular_action(p)).passed);
    }

    // zero-product target: the ten identities degenerate to the rep laws
    PrePoissonAlgebra p = catalog::pp3();
    PrePoissonRep coreg = coregular_rep(p);
    Action a{p, catalog::zero_algebra(3), coreg.rho, coreg.mu, coreg.theta, coreg.gamma};
    CHECK(is_action(a).passed);
}

TEST_CASE("is_relative_rb basics") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        Action reg = regular_action(p);
        Mat zero(p.dim, p.dim);
        for (Rat lambda : {Rat(0), Rat(1), Rat(-2)}) {
            CHECK(is_relative_rb(zero, lambda, reg).passed);
            // Rota-Baxter operators of weight lambda = relative RB wrt the
            // regular action
            CHECK(is_relative_rb(Mat::identity(p.dim).scaled(-lambda), lambda, reg).passed);
        }
    }
}

TEST_CASE("is_rb_pre_poisson universal operators") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        for (Rat lambda : {Rat(0), Rat(3), Rat(-1, 2)}) {
            CHECK(is_rb_pre_poisson(p, Mat(p.dim, p.dim), lambda).passed);
            CHECK(is_rb_pre_poisson(p, Mat::identity(p.dim).scaled(-lambda), lambda).passed);
        }
    }
}
