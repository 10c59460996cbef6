#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ppforge/catalog.hpp"
#include "ppforge/geometry.hpp"

using namespace ppforge;

TEST_CASE("standard_omega shape") {
    Mat w1 = standard_omega(1);
    CHECK(w1(0, 1) == -1);
    CHECK(w1(1, 0) == 1);
    for (int n = 1; n <= 4; ++n) {
        Mat w = standard_omega(n);
        CHECK((w + w.transpose()).is_zero());
        Mat inv = w.inverse(); // determinant 1, always invertible
        CHECK(w * inv == Mat::identity(2 * n));
    }
}

TEST_CASE("is_symplectic_poisson basics") {
    PoissonAlgebra zero = sub_adjacent(catalog::zero_algebra(2));
    CHECK(is_symplectic_poisson(zero, standard_omega(1)).passed);

    // degenerate form: a zero row
    Mat degenerate(2, 2);
    CheckReport rep = is_symplectic_poisson(zero, degenerate);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has("non-degenerate"));

    // symmetric form fails skewness
    Mat sym = Mat::identity(2);
    CHECK(is_symplectic_poisson(zero, sym).has("skew"));
}

TEST_CASE("phase_space output is symplectic and a phase space") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        auto [big, w] = phase_space(p);
        CHECK(big.dim == 2 * p.dim);
        CHECK(w == standard_omega(p.dim));
        CHECK(is_symplectic_poisson(big, w).passed);
        CHECK(is_phase_space(big, SplitDecoration{p.dim, p.dim}, w).passed);
        // the dual block is a trivial subalgebra
        CHECK(big.dot.restrict_block(p.dim, p.dim).is_zero());
        CHECK(big.bracket.restrict_block(p.dim, p.dim).is_zero());
        // the primal block carries the sub-adjacent products
        CHECK(big.dot.restrict_block(0, p.dim) == sub_adjacent(p).dot);
        CHECK(big.bracket.restrict_block(0, p.dim) == sub_adjacent(p).bracket);
    }
}

TEST_CASE("compatible_pre_poisson defining equations and round trip") {
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        INFO(name);
        auto [big, w] = phase_space(p);
        PrePoissonAlgebra compat = compatible_pre_poisson(big, w);
        CHECK(is_pre_poisson(compat).passed);
        CHECK(sub_adjacent(compat) == big);

        // defining equations hold exactly
        int n = big.dim;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Vec ej = basis_vec(n, j), ek = basis_vec(n, k);
                    CHECK(form_eval(w, compat.star.prod_basis(i, j), ek) ==
                          form_eval(w, ej, big.dot.prod_basis(i, k)));
                    CHECK(form_eval(w, compat.circ.prod_basis(i, j), ek) ==
                          -form_eval(w, ej, big.bracket.prod_basis(i, k)));
                }

        // restriction to the primal block recovers p (Thm 2.16 converse)
        CHECK(compat.star.block_closed(0, p.dim));
        CHECK(compat.circ.block_closed(0, p.dim));
        CHECK(compat.star.restrict_block(0, p.dim) == p.star);
        CHECK(compat.circ.restrict_block(0, p.dim) == p.circ);

        // the induced quadratic structure is a Manin triple (Thm 2.22)
        CHECK(is_quadratic_pre_poisson(compat, w).passed);
        CHECK(is_manin_triple(compat, SplitDecoration{p.dim, p.dim}, w).passed);
    }

    // zero Poisson + any non-degenerate skew form gives the zero structure
    PoissonAlgebra zero = sub_adjacent(catalog::zero_algebra(2));
    PrePoissonAlgebra compat = compatible_pre_poisson(zero, standard_omega(1));
    CHECK(compat.star.is_zero());
    CHECK(compat.circ.is_zero());

    CHECK_THROWS_AS(compatible_pre_poisson(zero, Mat::identity(2)), NotSymplectic);
}

TEST_CASE("is_quadratic_pre_poisson failure case from the invariance equation") {
    // (Z2, 0) with omega = [[0,1],[-1,0]]:
    // omega(e1*e1, e1) = omega(e2, e1) = -1 but omega(e1, e1.e1) = 2
    Mat w(2, 2);
    w(0, 1) = 1;
    w(1, 0) = -1;
    CheckReport rep = is_quadratic_pre_poisson(catalog::z2(), w);
    CHECK_FALSE(rep.passed);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.identity == "quadratic-1" && v.indices == std::vector<int>{0, 0, 0}) {
            found = true;
            CHECK(v.lhs == Vec{Rat(-1)});
            CHECK(v.rhs == Vec{Rat(2)});
        }
    CHECK(found);

    CHECK(is_quadratic_pre_poisson(catalog::zero_algebra(1), standard_omega(1)).passed);
}

TEST_CASE("quadratic consistency: the derived identities never fail alone") {
    std::mt19937 rng(707);
    // on random skew nondegenerate forms, whenever quadratic-1/2 hold the
    // derived identities quadratic-3a/3b hold as well
    for (const auto& [name, p] : catalog::pre_poisson_algebras()) {
        for (int t = 0; t < 20; ++t) {
            Mat w(p.dim, p.dim);
            for (int i = 0; i < p.dim; ++i)
                for (int j = i + 1; j < p.dim; ++j) {
                    Rat v = Rat(static_cast<int>(rng() % 5) - 2);
                    w(i, j) = v;
                    w(j, i) = -v;
                }
            CheckReport rep = is_quadratic_pre_poisson(p, w);
            bool main_ok = !rep.has("quadratic-1") && !rep.has("quadratic-2");
            bool derived_ok = !rep.has("quadratic-3a") && !rep.has("quadratic-3b");
            if (main_ok) CHECK(derived_ok);
        }
    }
}

TEST_CASE("is_phase_space rejects block leakage") {
    auto [big, w] = phase_space(catalog::z2());
    CHECK(is_phase_space(big, SplitDecoration{2, 2}, w).passed);

    // push a product across the splitting
    MultTable dot = big.dot;
    dot.c(2, 3, 0) = 1;
    dot.c(3, 2, 0) = 1;
    PoissonAlgebra mutated = PoissonAlgebra::unchecked(dot, big.bracket);
    CheckReport rep = is_phase_space(mutated, SplitDecoration{2, 2}, w);
    CHECK_FALSE(rep.passed);
    CHECK(rep.has("block-q-closed-dot"));

    // zero algebra is trivially a phase space
    PoissonAlgebra zero = sub_adjacent(catalog::zero_algebra(2));
    CHECK(is_phase_space(zero, SplitDecoration{1, 1}, standard_omega(1)).passed);
}

TEST_CASE("is_manin_triple basics") {
    CHECK(is_manin_triple(catalog::zero_algebra(2), SplitDecoration{1, 1}, standard_omega(1))
              .passed);
    // a symmetric form fails skewness
    CheckReport rep =
        is_manin_triple(catalog::zero_algebra(2), SplitDecoration{1, 1}, Mat::identity(2));
    CHECK_FALSE(rep.passed);
    CHECK(rep.has("skew"));
    // non-isotropic blocks are caught
    Mat w(2, 2);
    w(0, 1) = 1;
    w(1, 0) = -1;
    CHECK(is_manin_triple(catalog::zero_algebra(2), SplitDecoration{2, 0}, w).has("isotropic-p"));
}

TEST_CASE("Thm 2.16 and 2.22 round trips on random valid instances") {
    std::mt19937 rng(808);
    int found = 0, attempts = 0;
    const Rat values[] = {Rat(1), Rat(-1), Rat(1, 2)};
    while (found < 20 && attempts < 20000) {
        ++attempts;
        int dim = 1 + static_cast<int>(rng() % 3);
        MultTable star(dim), circ(dim);
        for (int e = 0; e < 2; ++e) {
            star.c(static_cast<int>(rng() % dim), static_cast<int>(rng() % dim),
                   static_cast<int>(rng() % dim)) += values[rng() % 3];
            circ.c(static_cast<int>(rng() % dim), static_cast<int>(rng() % dim),
                   static_cast<int>(rng() % dim)) += values[rng() % 3];
        }
        if (!is_pre_poisson(star, circ).passed) continue;
        ++found;
        PrePoissonAlgebra p = PrePoissonAlgebra::unchecked(star, circ);
        auto [big, w] = phase_space(p);
        CHECK(is_phase_space(big, SplitDecoration{dim, dim}, w).passed);
        PrePoissonAlgebra compat = compatible_pre_poisson(big, w);
        CHECK(compat.star.restrict_block(0, dim) == star);
        CHECK(compat.circ.restrict_block(0, dim) == circ);
        CHECK(is_manin_triple(compat, SplitDecoration{dim, dim}, w).passed);
    }
    REQUIRE(found >= 20);
}
