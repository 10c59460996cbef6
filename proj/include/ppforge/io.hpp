#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ppforge/catalog.hpp"
#include "ppforge/representations.hpp"

namespace ppforge {

using json = nlohmann::ordered_json;

enum class DocKind { algebra, poisson, bialgebra, rmatrix, rb, form, rep, bundle };

inline const char* kind_name(DocKind k) {
    switch (k) {
        case DocKind::algebra: return "algebra";
        case DocKind::poisson: return "poisson";
        case DocKind::bialgebra: return "bialgebra";
        case DocKind::rmatrix: return "rmatrix";
        case DocKind::rb: return "rb";
        case DocKind::form: return "form";
        case DocKind::rep: return "rep";
        default: return "bundle";
    }
}

// One parsed input file. Optional members are populated according to the
// kind; algebra payloads are stored unchecked so that cmd_check can report
// violations instead of refusing to parse.
struct Document {
    DocKind kind = DocKind::bundle;
    std::optional<PrePoissonAlgebra> algebra;
    std::optional<PoissonAlgebra> poisson;
    std::optional<Cobracket> delta_star, delta_circ;
    std::optional<Mat> r, b, omega;
    std::optional<Rat> weight;
    std::optional<SplitDecoration> split;
    std::optional<PrePoissonRep> rep;
};

namespace iodetail {

inline json rat_json(const Rat& x) { return rat_to_string(x); }

inline Rat rat_of(const json& j, const std::string& where) {
    if (!j.is_string())
        throw MalformedInput("expected a quoted rational string at " + where);
    return rat_from_string(j.get<std::string>());
}

inline json table_json(const MultTable& t) {
    json out = json::array();
    for (int i = 0; i < t.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < t.dim(); ++j) {
            json cell = json::array();
            for (int k = 0; k < t.dim(); ++k) cell.push_back(rat_json(t.c(i, j, k)));
            row.push_back(cell);
        }
        out.push_back(row);
    }
    return out;
}

inline MultTable table_of(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw MalformedInput("structure constants at " + where + " must be a dim-sized array");
    MultTable t(dim);
    for (int i = 0; i < dim; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim)
            throw MalformedInput("malformed row in " + where);
        for (int jj = 0; jj < dim; ++jj) {
            const json& cell = j[i][jj];
            if (!cell.is_array() || static_cast<int>(cell.size()) != dim)
                throw MalformedInput("malformed entry in " + where);
            for (int k = 0; k < dim; ++k) t.c(i, jj, k) = rat_of(cell[k], where);
        }
    }
    return t;
}

inline json mat_json(const Mat& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

inline Mat mat_of(const json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw MalformedInput("matrix at " + where + " has the wrong number of rows");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw MalformedInput("matrix at " + where + " has a malformed row");
        for (int jj = 0; jj < cols; ++jj) m(i, jj) = rat_of(j[i][jj], where);
    }
    return m;
}

inline json cobracket_json(const Cobracket& c) {
    json out = json::array();
    for (const auto& v : c.values) out.push_back(mat_json(v));
    return out;
}

inline Cobracket cobracket_of(const json& j, int dim, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw MalformedInput("cobracket at " + where + " must hold one matrix per basis element");
    Cobracket c{dim, {}};
    for (int k = 0; k < dim; ++k) c.values.push_back(mat_of(j[k], dim, dim, where));
    return c;
}

inline int dim_of(const json& j, const std::string& where) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw MalformedInput("missing or non-integer \"dim\" in " + where);
    int dim = j["dim"].get<int>();
    if (dim < 1) throw MalformedInput("\"dim\" must be positive in " + where);
    return dim;
}

inline PrePoissonAlgebra algebra_of(const json& j, const std::string& where) {
    int dim = dim_of(j, where);
    if (!j.contains("star") || !j.contains("circ"))
        throw MalformedInput("algebra at " + where + " needs \"star\" and \"circ\"");
    return PrePoissonAlgebra::unchecked(table_of(j["star"], dim, where + ".star"),
                                        table_of(j["circ"], dim, where + ".circ"));
}

inline json algebra_json(const PrePoissonAlgebra& p) {
    json j;
    j["dim"] = p.dim;
    j["star"] = table_json(p.star);
    j["circ"] = table_json(p.circ);
    return j;
}

inline PoissonAlgebra poisson_of(const json& j, const std::string& where) {
    int dim = dim_of(j, where);
    if (!j.contains("dot") || !j.contains("bracket"))
        throw MalformedInput("poisson algebra at " + where + " needs \"dot\" and \"bracket\"");
    return PoissonAlgebra::unchecked(table_of(j["dot"], dim, where + ".dot"),
                                     table_of(j["bracket"], dim, where + ".bracket"));
}

inline json poisson_json(const PoissonAlgebra& p) {
    json j;
    j["dim"] = p.dim;
    j["dot"] = table_json(p.dot);
    j["bracket"] = table_json(p.bracket);
    return j;
}

} // namespace iodetail

inline Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // recover line/column from the byte offset
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < text.size() && i + 1 < static_cast<std::size_t>(e.byte); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw MalformedInput("JSON parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(col));
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw MalformedInput("document must be an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    Document doc;
    using namespace iodetail;
    if (kind == "algebra") {
        doc.kind = DocKind::algebra;
        doc.algebra = algebra_of(j, "algebra");
    } else if (kind == "poisson") {
        doc.kind = DocKind::poisson;
        doc.poisson = poisson_of(j, "poisson");
    } else if (kind == "bialgebra") {
        doc.kind = DocKind::bialgebra;
        doc.algebra = algebra_of(j, "bialgebra");
        if (!j.contains("delta_star") || !j.contains("delta_circ"))
            throw MalformedInput("bialgebra needs \"delta_star\" and \"delta_circ\"");
        doc.delta_star = cobracket_of(j["delta_star"], doc.algebra->dim, "delta_star");
        doc.delta_circ = cobracket_of(j["delta_circ"], doc.algebra->dim, "delta_circ");
    } else if (kind == "rmatrix") {
        doc.kind = DocKind::rmatrix;
        if (!j.contains("algebra")) throw MalformedInput("rmatrix needs an \"algebra\" object");
        doc.algebra = algebra_of(j["algebra"], "rmatrix.algebra");
        if (!j.contains("r")) throw MalformedInput("rmatrix needs \"r\"");
        doc.r = mat_of(j["r"], doc.algebra->dim, doc.algebra->dim, "r");
    } else if (kind == "form") {
        doc.kind = DocKind::form;
        int dim = dim_of(j, "form");
        if (!j.contains("omega")) throw MalformedInput("form needs \"omega\"");
        doc.omega = mat_of(j["omega"], dim, dim, "omega");
    } else if (kind == "rb") {
        doc.kind = DocKind::rb;
        if (j.contains("algebra")) doc.algebra = algebra_of(j["algebra"], "rb.algebra");
        else if (j.contains("poisson")) doc.poisson = poisson_of(j["poisson"], "rb.poisson");
        else throw MalformedInput("rb needs \"algebra\" or \"poisson\"");
        int dim = doc.algebra ? doc.algebra->dim : doc.poisson->dim;
        if (!j.contains("b") || !j.contains("weight"))
            throw MalformedInput("rb needs \"b\" and \"weight\"");
        doc.b = mat_of(j["b"], dim, dim, "b");
        doc.weight = rat_of(j["weight"], "weight");
    } else if (kind == "rep") {
        doc.kind = DocKind::rep;
        if (!j.contains("algebra")) throw MalformedInput("rep needs an \"algebra\" object");
        doc.algebra = algebra_of(j["algebra"], "rep.algebra");
        if (!j.contains("dimv") || !j["dimv"].is_number_integer())
            throw MalformedInput("rep needs an integer \"dimv\"");
        int dimv = j["dimv"].get<int>();
        if (dimv < 0) throw MalformedInput("\"dimv\" must be non-negative");
        PrePoissonRep rep{*doc.algebra, dimv, {}, {}, {}, {}};
        for (const char* key : {"rho", "mu", "theta", "gamma"}) {
            if (!j.contains(key)) throw MalformedInput(std::string("rep needs \"") + key + "\"");
            const json& arr = j[key];
            if (!arr.is_array() || static_cast<int>(arr.size()) != doc.algebra->dim)
                throw MalformedInput(std::string("rep: \"") + key +
                                     "\" must hold one matrix per basis element");
            std::vector<Mat>* target = key == std::string("rho")     ? &rep.rho
                                       : key == std::string("mu")    ? &rep.mu
                                       : key == std::string("theta") ? &rep.theta
                                                                     : &rep.gamma;
            for (int i = 0; i < doc.algebra->dim; ++i)
                target->push_back(mat_of(arr[i], dimv, dimv, key));
        }
        doc.rep = std::move(rep);
    } else if (kind == "bundle") {
        doc.kind = DocKind::bundle;
        if (j.contains("algebra")) doc.algebra = algebra_of(j["algebra"], "bundle.algebra");
        if (j.contains("poisson")) doc.poisson = poisson_of(j["poisson"], "bundle.poisson");
        int dim = doc.algebra ? doc.algebra->dim : doc.poisson ? doc.poisson->dim : 0;
        if (dim == 0) throw MalformedInput("bundle needs \"algebra\" or \"poisson\"");
        if (j.contains("delta_star"))
            doc.delta_star = cobracket_of(j["delta_star"], dim, "delta_star");
        if (j.contains("delta_circ"))
            doc.delta_circ = cobracket_of(j["delta_circ"], dim, "delta_circ");
        if (j.contains("r")) doc.r = mat_of(j["r"], dim, dim, "r");
        if (j.contains("b")) doc.b = mat_of(j["b"], dim, dim, "b");
        if (j.contains("omega")) doc.omega = mat_of(j["omega"], dim, dim, "omega");
        if (j.contains("weight")) doc.weight = rat_of(j["weight"], "weight");
        if (j.contains("split")) {
            const json& s = j["split"];
            if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
                !s[1].is_number_integer())
                throw MalformedInput("\"split\" must be [dim_p, dim_q]");
            doc.split = SplitDecoration{s[0].get<int>(), s[1].get<int>()};
            if (doc.split->dim_p + doc.split->dim_q != dim)
                throw MalformedInput("\"split\" does not partition the basis");
        }
    } else {
        throw MalformedInput("unknown kind \"" + kind + "\"");
    }
    return doc;
}

inline std::string serialize_document(const Document& doc) {
    using namespace iodetail;
    json j;
    j["kind"] = kind_name(doc.kind);
    switch (doc.kind) {
        case DocKind::algebra: {
            json a = algebra_json(*doc.algebra);
            for (auto& [k, v] : a.items()) j[k] = v;
            break;
        }
        case DocKind::poisson: {
            json a = poisson_json(*doc.poisson);
            for (auto& [k, v] : a.items()) j[k] = v;
            break;
        }
        case DocKind::bialgebra: {
            json a = algebra_json(*doc.algebra);
            for (auto& [k, v] : a.items()) j[k] = v;
            j["delta_star"] = cobracket_json(*doc.delta_star);
            j["delta_circ"] = cobracket_json(*doc.delta_circ);
            break;
        }
        case DocKind::rmatrix:
            j["algebra"] = algebra_json(*doc.algebra);
            j["r"] = mat_json(*doc.r);
            break;
        case DocKind::form:
            j["dim"] = doc.omega->rows();
            j["omega"] = mat_json(*doc.omega);
            break;
        case DocKind::rb:
            if (doc.algebra) j["algebra"] = algebra_json(*doc.algebra);
            else j["poisson"] = poisson_json(*doc.poisson);
            j["b"] = mat_json(*doc.b);
            j["weight"] = rat_json(*doc.weight);
            break;
        case DocKind::rep: {
            j["algebra"] = algebra_json(doc.rep->algebra);
            j["dimv"] = doc.rep->dimv;
            auto maps = [&](const std::vector<Mat>& ms) {
                json arr = json::array();
                for (const auto& m : ms) arr.push_back(mat_json(m));
                return arr;
            };
            j["rho"] = maps(doc.rep->rho);
            j["mu"] = maps(doc.rep->mu);
            j["theta"] = maps(doc.rep->theta);
            j["gamma"] = maps(doc.rep->gamma);
            break;
        }
        case DocKind::bundle:
            if (doc.algebra) j["algebra"] = algebra_json(*doc.algebra);
            if (doc.poisson) j["poisson"] = poisson_json(*doc.poisson);
            if (doc.delta_star) j["delta_star"] = cobracket_json(*doc.delta_star);
            if (doc.delta_circ) j["delta_circ"] = cobracket_json(*doc.delta_circ);
            if (doc.omega) j["omega"] = mat_json(*doc.omega);
            if (doc.split) j["split"] = json::array({doc.split->dim_p, doc.split->dim_q});
            if (doc.r) j["r"] = mat_json(*doc.r);
            if (doc.b) j["b"] = mat_json(*doc.b);
            if (doc.weight) j["weight"] = rat_json(*doc.weight);
            break;
    }
    return j.dump(2) + "\n";
}

// Materialized built-in instances for --catalog.
inline Document catalog_document(const std::string& name) {
    for (const auto& [n, p] : catalog::pre_poisson_algebras())
        if (n == name) {
            Document d;
            d.kind = DocKind::algebra;
            d.algebra = p;
            return d;
        }
    for (const auto& [n, p] : catalog::poisson_algebras())
        if (n == name) {
            Document d;
            d.kind = DocKind::poisson;
            d.poisson = p;
            return d;
        }
    for (const auto& [n, b] : catalog::bialgebras())
        if (n == name) {
            Document d;
            d.kind = DocKind::bialgebra;
            d.algebra = b.algebra;
            d.delta_star = b.delta_star;
            d.delta_circ = b.delta_circ;
            return d;
        }
    for (const auto& db : catalog::doubles())
        if (db.name == name) {
            Document d;
            d.kind = DocKind::bundle;
            d.algebra = db.algebra;
            d.omega = db.omega;
            d.split = db.split;
            d.r = db.r;
            return d;
        }
    for (const auto& rb : catalog::rb0_pairs())
        if (rb.name == name) {
            Document d;
            d.kind = DocKind::bundle;
            d.poisson = rb.algebra;
            d.b = rb.B;
            d.weight = rb.weight;
            return d;
        }
    for (const auto& q : catalog::quadratic_rb_bundles())
        if (q.name == name) {
            Document d;
            d.kind = DocKind::bundle;
            d.algebra = q.data.algebra;
            d.omega = q.data.omega;
            d.b = q.data.B;
            d.weight = q.data.weight;
            return d;
        }
    if (name == "rm-z2-sym") {
        Document d;
        d.kind = DocKind::rmatrix;
        d.algebra = catalog::z2();
        Mat r(2, 2);
        r(1, 1) = 1;
        d.r = r;
        return d;
    }
    throw UsageError("UnknownCatalogEntry", "no catalog entry named \"" + name + "\"");
}

} // namespace ppforge
