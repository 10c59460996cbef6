#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ppforge/rota_baxter.hpp"

namespace ppforge {

// Built-in instances behind the CLI --catalog flag. Everything here is
// exactly representable and revalidated on construction.

namespace catalog {

inline MultTable table(int dim, std::initializer_list<std::tuple<int, int, int, Rat>> entries) {
    MultTable t(dim);
    for (const auto& [i, j, k, v] : entries) t.c(i, j, k) = v;
    return t;
}

inline PrePoissonAlgebra zero_algebra(int n) {
    return PrePoissonAlgebra(MultTable(n), MultTable(n));
}

// dim 2, e1*e1 = e2, circ = 0.
inline PrePoissonAlgebra z2() {
    return PrePoissonAlgebra(table(2, {{0, 0, 1, 1}}), MultTable(2));
}

// dim 2, star = 0, e1 o e2 = e2.
inline PrePoissonAlgebra pl2() {
    return PrePoissonAlgebra(MultTable(2), table(2, {{0, 1, 1, 1}}));
}

// dim 2, e1*e1 = e2 and e1 o e1 = e2.
inline PrePoissonAlgebra pp2() {
    return PrePoissonAlgebra(table(2, {{0, 0, 1, 1}}), table(2, {{0, 0, 1, 1}}));
}

// dim 3, e1*e1 = e3, e1 o e2 = e2; nonabelian sub-adjacent bracket.
inline PrePoissonAlgebra pp3() {
    return PrePoissonAlgebra(table(3, {{0, 0, 2, 1}}), table(3, {{0, 1, 1, 1}}));
}

// dim 4 truncated integration Zinbiel algebra: e1*e1 = (1/2)e3,
// e1*e2 = (1/2)e4, e2*e1 = (1/3)e4; circ = 0.
inline PrePoissonAlgebra zt4() {
    return PrePoissonAlgebra(
        table(4, {{0, 0, 2, Rat(1, 2)}, {0, 1, 3, Rat(1, 2)}, {1, 0, 3, Rat(1, 3)}}),
        MultTable(4));
}

inline std::vector<std::pair<std::string, PrePoissonAlgebra>> pre_poisson_algebras() {
    return {{"zero1", zero_algebra(1)}, {"zero2", zero_algebra(2)}, {"z2", z2()},
            {"pl2", pl2()},             {"pp2", pp2()},             {"pp3", pp3()},
            {"zt4", zt4()}};
}

inline std::vector<std::pair<std::string, PoissonAlgebra>> poisson_algebras() {
    std::vector<std::pair<std::string, PoissonAlgebra>> out;
    for (const auto& [name, p] : pre_poisson_algebras())
        out.emplace_back("poisson-" + name, sub_adjacent(p));
    return out;
}

inline PrePoissonBialgebra trivial_bialgebra(const PrePoissonAlgebra& p) {
    return PrePoissonBialgebra{p, Cobracket::zero(p.dim), Cobracket::zero(p.dim)};
}

inline std::vector<std::pair<std::string, PrePoissonBialgebra>> bialgebras() {
    std::vector<std::pair<std::string, PrePoissonBialgebra>> out;
    for (const auto& [name, p] : pre_poisson_algebras())
        out.emplace_back("bialg-" + name, trivial_bialgebra(p));
    return out;
}

// Doubles of the catalog bialgebras, each carrying the canonical r.
struct DoubleBundle {
    std::string name;
    PrePoissonAlgebra algebra;
    Mat omega;
    SplitDecoration split;
    Mat r;
};

inline std::vector<DoubleBundle> doubles() {
    std::vector<DoubleBundle> out;
    for (const auto& [name, b] : bialgebras()) {
        DoubleResult d = double_of_bialgebra(b);
        std::string base = name.substr(std::string("bialg-").size());
        out.push_back(DoubleBundle{"double-" + base, d.algebra, d.omega, d.split,
                                   canonical_double_r(b.algebra.dim)});
    }
    return out;
}

// Weight-0 Rota-Baxter pairs on catalog Poisson algebras.
struct RBBundle {
    std::string name;
    PoissonAlgebra algebra;
    Mat B;
    Rat weight;
};

inline std::vector<RBBundle> rb0_pairs() {
    std::vector<RBBundle> out;
    {
        PoissonAlgebra p = sub_adjacent(z2());
        Mat B(2, 2);
        B(1, 0) = 1; // e1 -> e2, e2 -> 0
        out.push_back(RBBundle{"rb0-z2", p, B, Rat(0)});
    }
    {
        PoissonAlgebra p = sub_adjacent(pp3());
        Mat B(3, 3);
        B(2, 1) = 1; // e2 -> e3, others -> 0
        out.push_back(RBBundle{"rb0-pp3", p, B, Rat(0)});
    }
    {
        PoissonAlgebra p = sub_adjacent(zero_algebra(2));
        out.push_back(RBBundle{"rb0-zero2", p, Mat(2, 2), Rat(0)});
    }
    return out;
}

// Quadratic Rota-Baxter structures of weight 1 on the catalog doubles,
// built through the factorizable correspondence.
struct QuadRBBundle {
    std::string name;
    QuadraticRBPrePoisson data;
};

inline std::vector<QuadRBBundle> quadratic_rb_bundles() {
    std::vector<QuadRBBundle> out;
    for (const auto& d : doubles()) {
        RMatrix rm{d.algebra, d.r};
        out.push_back(QuadRBBundle{"qrb-" + d.name, quadratic_rb_from_factorizable(rm, Rat(1))});
    }
    return out;
}

inline std::vector<std::string> names() {
    std::vector<std::string> out;
    for (const auto& [n, p] : pre_poisson_algebras()) out.push_back(n);
    for (const auto& [n, p] : poisson_algebras()) out.push_back(n);
    for (const auto& [n, b] : bialgebras()) out.push_back(n);
    for (const auto& d : doubles()) out.push_back(d.name);
    for (const auto& r : rb0_pairs()) out.push_back(r.name);
    for (const auto& q : quadratic_rb_bundles()) out.push_back(q.name);
    out.push_back("rm-z2-sym");
    return out;
}

} // namespace catalog

} // namespace ppforge
