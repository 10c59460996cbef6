// ppforge - exact verification and construction for pre-Poisson structures.
//
// Exit codes: 0 all checks pass, 1 usage or input error, 2 mathematical
// violation. Reports are deterministic: violations are sorted and printed
// with 1-based basis indices and reduced fractions.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppforge/ppforge.hpp"

namespace {

using namespace ppforge;

bool use_color() {
    const char* c = std::getenv("PPFORGE_COLOR");
    return c && std::string(c) == "1";
}

std::string pass_str(bool ok) {
    if (!use_color()) return ok ? "PASS" : "FAIL";
    return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

struct NamedReport {
    std::string check;
    CheckReport report;
};

void sort_violations(CheckReport& rep) {
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  if (a.identity != b.identity) return a.identity < b.identity;
                  return a.indices < b.indices;
              });
}

json violation_json(const Violation& v) {
    json j;
    j["identity"] = v.identity;
    json idx = json::array();
    for (int i : v.indices) idx.push_back(i + 1);
    j["indices"] = idx;
    json lhs = json::array(), rhs = json::array();
    for (const auto& x : v.lhs) lhs.push_back(rat_to_string(x));
    for (const auto& x : v.rhs) rhs.push_back(rat_to_string(x));
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    return j;
}

int print_reports(std::vector<NamedReport> reports, bool as_json,
                  std::size_t max_violations = 16) {
    bool all_ok = true;
    for (auto& nr : reports) {
        sort_violations(nr.report);
        all_ok = all_ok && nr.report.passed;
    }
    if (as_json) {
        json out;
        out["results"] = json::array();
        for (const auto& nr : reports) {
            json r;
            r["check"] = nr.check;
            r["passed"] = nr.report.passed;
            r["violations"] = json::array();
            for (const auto& v : nr.report.violations) r["violations"].push_back(violation_json(v));
            out["results"].push_back(r);
        }
        out["passed"] = all_ok;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& nr : reports) {
            std::cout << "check " << nr.check << ": " << pass_str(nr.report.passed);
            if (!nr.report.passed)
                std::cout << " (" << nr.report.violations.size() << " violation"
                          << (nr.report.violations.size() == 1 ? "" : "s") << ")";
            std::cout << "\n";
            std::size_t shown = 0;
            for (const auto& v : nr.report.violations) {
                if (shown++ == max_violations) {
                    std::cout << "  ...\n";
                    break;
                }
                std::cout << "  " << violation_to_string(v) << "\n";
            }
        }
    }
    return all_ok ? 0 : 2;
}

Document load_document(const std::string& file, const std::string& catalog_name) {
    if (!catalog_name.empty()) return catalog_document(catalog_name);
    if (file.empty()) throw UsageError("MissingInput", "provide an input file or --catalog NAME");
    std::ifstream in(file, std::ios::binary);
    if (!in) throw UsageError("MissingInput", "cannot open file '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

PrePoissonBialgebra bialgebra_of(const Document& doc) {
    if (!doc.algebra || !doc.delta_star || !doc.delta_circ)
        throw KindMismatch("this command needs a bialgebra document");
    return PrePoissonBialgebra{*doc.algebra, *doc.delta_star, *doc.delta_circ};
}

RMatrix rmatrix_of(const Document& doc) {
    if (!doc.algebra || !doc.r)
        throw KindMismatch("this command needs an algebra with an attached r");
    return RMatrix{*doc.algebra, *doc.r};
}

// All checks applicable to the payload, in the order they are reported.
std::vector<std::string> default_checks(const Document& doc) {
    std::vector<std::string> out;
    if (doc.algebra) {
        out.push_back("zinbiel");
        out.push_back("pre-lie");
        out.push_back("pre-poisson");
    }
    if (doc.poisson) out.push_back("poisson");
    if (doc.rep) out.push_back("pre-poisson-rep");
    if (doc.delta_star && doc.delta_circ && doc.algebra) {
        out.push_back("bialgebra-compat");
        out.push_back("bialgebra");
    }
    if (doc.algebra && doc.r) {
        out.push_back("lr-invariant");
        out.push_back("coboundary");
    }
    if (doc.poisson && doc.omega) out.push_back("symplectic");
    if (doc.algebra && doc.omega) out.push_back("quadratic");
    if (doc.algebra && doc.omega && doc.split) out.push_back("manin-triple");
    if (doc.poisson && doc.omega && doc.split) out.push_back("phase-space");
    if (doc.poisson && doc.b && doc.weight) out.push_back("rb-poisson");
    if (doc.algebra && doc.b && doc.weight) out.push_back("rb-pre-poisson");
    if (doc.algebra && doc.b && doc.weight && doc.omega) out.push_back("quadratic-rb");
    if (doc.poisson && doc.b && doc.weight && doc.omega) out.push_back("rb-symplectic");
    return out;
}

CheckReport run_check(const Document& doc, const std::string& name) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw KindMismatch(std::string("check '") + what + "' does not apply to this document");
    };
    if (name == "zinbiel") {
        need(doc.algebra.has_value(), "zinbiel");
        return is_zinbiel(doc.algebra->star);
    }
    if (name == "pre-lie") {
        need(doc.algebra.has_value(), "pre-lie");
        return is_pre_lie(doc.algebra->circ);
    }
    if (name == "pre-poisson") {
        need(doc.algebra.has_value(), "pre-poisson");
        return is_pre_poisson(*doc.algebra);
    }
    if (name == "poisson") {
        need(doc.poisson.has_value(), "poisson");
        return is_poisson(*doc.poisson);
    }
    if (name == "pre-poisson-rep") {
        need(doc.rep.has_value(), "pre-poisson-rep");
        return is_pre_poisson_rep(*doc.rep);
    }
    if (name == "bialgebra-compat") return check_bialgebra_compat(bialgebra_of(doc));
    if (name == "bialgebra") return is_pre_poisson_bialgebra(bialgebra_of(doc));
    if (name == "lr-invariant") return is_lr_invariant(rmatrix_of(doc));
    if (name == "coboundary") return check_coboundary_conditions(rmatrix_of(doc));
    if (name == "symplectic") {
        need(doc.poisson && doc.omega, "symplectic");
        return is_symplectic_poisson(*doc.poisson, *doc.omega);
    }
    if (name == "quadratic") {
        need(doc.algebra && doc.omega, "quadratic");
        return is_quadratic_pre_poisson(*doc.algebra, *doc.omega);
    }
    if (name == "manin-triple") {
        need(doc.algebra && doc.omega && doc.split, "manin-triple");
        return is_manin_triple(*doc.algebra, *doc.split, *doc.omega);
    }
    if (name == "phase-space") {
        need(doc.poisson && doc.omega && doc.split, "phase-space");
        return is_phase_space(*doc.poisson, *doc.split, *doc.omega);
    }
    if (name == "rb-poisson") {
        need(doc.poisson && doc.b && doc.weight, "rb-poisson");
        return is_rb_poisson(*doc.poisson, *doc.b, *doc.weight);
    }
    if (name == "rb-pre-poisson") {
        need(doc.algebra && doc.b && doc.weight, "rb-pre-poisson");
        return is_rb_pre_poisson(*doc.algebra, *doc.b, *doc.weight);
    }
    if (name == "quadratic-rb") {
        need(doc.algebra && doc.b && doc.weight && doc.omega, "quadratic-rb");
        return is_quadratic_rb(QuadraticRBPrePoisson{*doc.algebra, *doc.b, *doc.weight, *doc.omega});
    }
    if (name == "rb-symplectic") {
        need(doc.poisson && doc.b && doc.weight && doc.omega, "rb-symplectic");
        return is_rb_symplectic_poisson(
            RBSymplecticPoisson{*doc.poisson, *doc.b, *doc.weight, *doc.omega});
    }
    throw UnknownCheck("unknown check '" + name + "'");
}

Document run_construct(const Document& doc, const std::string& target, const Rat& lambda) {
    Document out;
    if (target == "sub-adjacent") {
        if (!doc.algebra) throw KindMismatch("sub-adjacent needs an algebra document");
        out.kind = DocKind::poisson;
        out.poisson = sub_adjacent(*doc.algebra);
        return out;
    }
    if (target == "phase-space") {
        if (!doc.algebra) throw KindMismatch("phase-space needs an algebra document");
        auto [big, w] = phase_space(*doc.algebra);
        out.kind = DocKind::bundle;
        out.poisson = big;
        out.omega = w;
        out.split = SplitDecoration{doc.algebra->dim, doc.algebra->dim};
        return out;
    }
    if (target == "double") {
        DoubleResult d = double_of_bialgebra(bialgebra_of(doc));
        out.kind = DocKind::bundle;
        out.algebra = d.algebra;
        out.omega = d.omega;
        out.split = d.split;
        out.r = canonical_double_r(d.split.dim_p);
        return out;
    }
    if (target == "dual-bialgebra") {
        PrePoissonBialgebra dual = dual_bialgebra(bialgebra_of(doc));
        out.kind = DocKind::bialgebra;
        out.algebra = dual.algebra;
        out.delta_star = dual.delta_star;
        out.delta_circ = dual.delta_circ;
        return out;
    }
    if (target == "descendent") {
        if (!doc.algebra || !doc.b || !doc.weight)
            throw KindMismatch("descendent needs an algebra with b and weight");
        out.kind = DocKind::algebra;
        out.algebra = descendent(*doc.algebra, *doc.b, *doc.weight);
        return out;
    }
    if (target == "coboundary") {
        RMatrix rm = rmatrix_of(doc);
        auto [D, dl] = coboundary_cobrackets(rm);
        out.kind = DocKind::bialgebra;
        out.algebra = rm.algebra;
        out.delta_star = D;
        out.delta_circ = dl;
        return out;
    }
    if (target == "semidirect") {
        if (!doc.rep) throw KindMismatch("semidirect needs a rep document");
        out.kind = DocKind::algebra;
        out.algebra = semidirect_pre_poisson(doc.rep->algebra, *doc.rep);
        return out;
    }
    if (target == "compatible-pre-poisson") {
        if (!doc.poisson || !doc.omega)
            throw KindMismatch("compatible-pre-poisson needs a poisson algebra with omega");
        out.kind = DocKind::algebra;
        out.algebra = compatible_pre_poisson(*doc.poisson, *doc.omega);
        return out;
    }
    if (target == "quadratic-rb") {
        RMatrix rm = rmatrix_of(doc);
        QuadraticRBPrePoisson q = quadratic_rb_from_factorizable(rm, lambda);
        out.kind = DocKind::bundle;
        out.algebra = q.algebra;
        out.omega = q.omega;
        out.b = q.B;
        out.weight = q.weight;
        out.r = doc.r;
        return out;
    }
    if (target == "factorizable-r") {
        if (!doc.algebra || !doc.b || !doc.weight || !doc.omega)
            throw KindMismatch("factorizable-r needs algebra, b, weight and omega");
        RMatrix rm = factorizable_from_quadratic_rb(
            QuadraticRBPrePoisson{*doc.algebra, *doc.b, *doc.weight, *doc.omega});
        out.kind = DocKind::rmatrix;
        out.algebra = rm.algebra;
        out.r = rm.r;
        return out;
    }
    if (target == "rb-phase-space") {
        if (!doc.poisson || !doc.b || !doc.weight || !doc.omega)
            throw KindMismatch("rb-phase-space needs poisson, b, weight and omega");
        auto [big, w, split] = phase_space_from_rb_symplectic(
            RBSymplecticPoisson{*doc.poisson, *doc.b, *doc.weight, *doc.omega});
        out.kind = DocKind::bundle;
        out.poisson = big;
        out.omega = w;
        out.split = split;
        return out;
    }
    throw UsageError("UnknownTarget", "unknown construct target '" + target + "'");
}

int cmd_classify(const Document& doc, bool as_json) {
    RMatrix rm = rmatrix_of(doc);
    RClassification c = classify_r(rm);
    if (as_json) {
        json out;
        out["coboundary_valid"] = c.coboundary_valid;
        out["lr_invariant_skew_part"] = c.lr_invariant_skew_part;
        out["ybe_solved"] = c.ybe_solved;
        out["quasi_triangular"] = c.quasi_triangular;
        out["triangular"] = c.triangular;
        out["factorizable"] = c.factorizable;
        out["z_support"] = c.z_support;
        out["s_support"] = c.s_support;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "coboundary_valid: " << (c.coboundary_valid ? "true" : "false") << "\n"
                  << "lr_invariant_skew_part: " << (c.lr_invariant_skew_part ? "true" : "false")
                  << "\n"
                  << "ybe_solved: " << (c.ybe_solved ? "true" : "false") << "\n"
                  << "quasi_triangular: " << (c.quasi_triangular ? "true" : "false") << "\n"
                  << "triangular: " << (c.triangular ? "true" : "false") << "\n"
                  << "factorizable: " << (c.factorizable ? "true" : "false") << "\n"
                  << "z_support: " << c.z_support << "\n"
                  << "s_support: " << c.s_support << "\n";
    }
    return 0;
}

int cmd_roundtrip(const Document& doc, const Rat& lambda, bool as_json) {
    RMatrix rm = rmatrix_of(doc);
    QuadraticRBPrePoisson q = quadratic_rb_from_factorizable(rm, lambda);
    RMatrix back = factorizable_from_quadratic_rb(q);
    bool same = back.r == rm.r;
    if (as_json) {
        json out;
        out["match"] = same;
        if (!same) {
            out["input_r"] = iodetail::mat_json(rm.r);
            out["reconstructed_r"] = iodetail::mat_json(back.r);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "roundtrip: " << pass_str(same) << "\n";
        if (!same) {
            std::cout << "input r:\n" << iodetail::mat_json(rm.r).dump(2) << "\n";
            std::cout << "reconstructed r:\n" << iodetail::mat_json(back.r).dump(2) << "\n";
        }
    }
    return same ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker and constructor for pre-Poisson structures"};
    app.require_subcommand(1);

    std::string file, catalog_name, target, lambda_str = "1";
    std::vector<std::string> checks;
    bool as_json = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input document (canonical JSON)");
        cmd->add_option("--catalog", catalog_name, "use a built-in catalog entry");
        cmd->add_flag("--json", as_json, "machine-readable output");
        cmd->add_flag("--text", "human-readable output (default)");
    };

    CLI::App* check = app.add_subcommand("check", "verify axioms and identities");
    add_input(check);
    check->add_option("--check", checks, "check name (repeatable)");

    CLI::App* construct = app.add_subcommand("construct", "run a construction");
    add_input(construct);
    construct->add_option("--target", target, "construction target")->required();
    construct->add_option("--lambda", lambda_str, "Rota-Baxter weight (rational)");

    CLI::App* classify = app.add_subcommand("classify", "classify an r-matrix");
    add_input(classify);

    CLI::App* roundtrip =
        app.add_subcommand("roundtrip", "factorizable <-> quadratic Rota-Baxter roundtrip");
    add_input(roundtrip);
    roundtrip->add_option("--lambda", lambda_str, "Rota-Baxter weight (rational)");

    CLI::App* cat = app.add_subcommand("catalog", "list built-in catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cat->parsed()) {
            for (const auto& name : ppforge::catalog::names()) std::cout << name << "\n";
            return 0;
        }
        ppforge::Document doc = load_document(file, catalog_name);
        if (check->parsed()) {
            std::vector<std::string> names = checks.empty() ? default_checks(doc) : checks;
            if (names.empty())
                throw ppforge::UnknownCheck("no checks apply to this document");
            std::vector<NamedReport> reports;
            for (const auto& name : names) reports.push_back({name, run_check(doc, name)});
            return print_reports(std::move(reports), as_json);
        }
        if (construct->parsed()) {
            ppforge::Rat lambda = ppforge::rat_from_string(lambda_str);
            ppforge::Document out = run_construct(doc, target, lambda);
            std::cout << ppforge::serialize_document(out);
            return 0;
        }
        if (classify->parsed()) return cmd_classify(doc, as_json);
        if (roundtrip->parsed())
            return cmd_roundtrip(doc, ppforge::rat_from_string(lambda_str), as_json);
    } catch (const ppforge::UsageError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const ppforge::MathError& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
