#include "quiso/io.hpp"

#include <nlohmann/json.hpp>

namespace quiso {

namespace {

using nlohmann::json;

void require_members(const json& doc, std::initializer_list<const char*> allowed,
                     const char* what) {
    if (!doc.is_object()) {
        throw ValidationError(std::string(what) + " must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* name : allowed) {
            if (key == name) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ValidationError("unknown member '" + key + "' in " + what);
        }
    }
    for (const char* name : allowed) {
        if (!doc.contains(name)) {
            throw ValidationError(std::string("missing member '") + name +
                                  "' in " + what);
        }
    }
}

Complex entry_from_json(const json& e) {
    if (e.is_number()) {
        return Complex(e.get<double>(), 0.0);
    }
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        return Complex(e[0].get<double>(), e[1].get<double>());
    }
    throw ValidationError("matrix entries must be numbers or [re, im] pairs");
}

} // namespace

json quiver_to_json(const Quiver& q) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) {
        arrows.push_back({{"name", a.name}, {"src", a.src}, {"tgt", a.tgt}});
    }
    return json{{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& doc) {
    require_members(doc, {"vertices", "arrows"}, "quiver");
    if (!doc["vertices"].is_number_integer() || !doc["arrows"].is_array()) {
        throw ValidationError("quiver members have the wrong types");
    }
    std::vector<Arrow> arrows;
    for (const json& a : doc["arrows"]) {
        require_members(a, {"name", "src", "tgt"}, "arrow");
        if (!a["name"].is_string() || !a["src"].is_number_integer() ||
            !a["tgt"].is_number_integer()) {
            throw ValidationError("arrow members have the wrong types");
        }
        arrows.push_back({a["name"].get<std::string>(), a["src"].get<int>(),
                          a["tgt"].get<int>()});
    }
    return Quiver(doc["vertices"].get<int>(), std::move(arrows));
}

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& doc) {
    if (!doc.is_array()) {
        throw ValidationError("a matrix must be an array of rows");
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(doc.size());
    Eigen::Index cols = -1;
    CMatrix m;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = doc[static_cast<std::size_t>(i)];
        if (!row.is_array()) {
            throw ValidationError("each matrix row must be an array");
        }
        if (cols < 0) {
            cols = static_cast<Eigen::Index>(row.size());
            m.resize(rows, cols);
        } else if (std::ssize(row) != cols) {
            throw ValidationError("matrix rows have uneven lengths");
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = entry_from_json(row[static_cast<std::size_t>(j)]);
        }
    }
    if (rows == 0) m.resize(0, 0);
    return m;
}

Problem parse_problem(const json& doc) {
    require_members(doc, {"quiver", "dims", "field", "matrices"}, "problem file");
    Problem p{{quiver_from_json(doc["quiver"]), {}, {}}, FieldMode::Complex};

    const std::string field = doc["field"].get<std::string>();
    if (field == "real") {
        p.field = FieldMode::Real;
    } else if (field != "complex") {
        throw ValidationError("field must be \"complex\" or \"real\"");
    }

    if (!doc["dims"].is_array()) {
        throw ValidationError("dims must be an array");
    }
    for (const json& d : doc["dims"]) {
        if (!d.is_number_integer() || d.get<long long>() < 0) {
            throw ValidationError("dims entries must be nonnegative integers");
        }
        p.rep.dims.push_back(d.get<Eigen::Index>());
    }

    if (!doc["matrices"].is_object()) {
        throw ValidationError("matrices must be an object keyed by arrow name");
    }
    for (const auto& [name, value] : doc["matrices"].items()) {
        CMatrix m = matrix_from_json(value);
        // A 0 x k or k x 0 matrix serializes without column information;
        // recover the shape from the quiver.
        if (p.rep.quiver.has_arrow(name) && m.size() == 0) {
            const Arrow& a = p.rep.quiver.arrow(name);
            const auto dim = [&](int v) {
                return v <= std::ssize(p.rep.dims)
                           ? p.rep.dims[static_cast<std::size_t>(v - 1)]
                           : 0;
            };
            m.resize(dim(a.tgt), dim(a.src));
        }
        p.rep.matrices[name] = std::move(m);
    }
    validate_representation(p.rep, p.field);
    return p;
}

Problem parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

json serialize_problem(const Problem& p) {
    json matrices = json::object();
    for (const auto& [name, m] : p.rep.matrices) {
        matrices[name] = matrix_to_json(m);
    }
    return json{{"quiver", quiver_to_json(p.rep.quiver)},
                {"dims", p.rep.dims},
                {"field", p.field == FieldMode::Real ? "real" : "complex"},
                {"matrices", matrices}};
}

json verdict_to_json(const IsometryVerdict& v) {
    json doc{{"outcome", v.agree ? "agree" : "distinguished"},
             {"max_len", v.max_len},
             {"certified", v.certified}};
    if (v.witness) {
        doc["witness"] = {
            {"cycle", v.witness->cycle.to_string()},
            {"trace_a", {v.witness->trace_a.real(), v.witness->trace_a.imag()}},
            {"trace_b", {v.witness->trace_b.real(), v.witness->trace_b.imag()}}};
    }
    return doc;
}

json family_to_json(const IsometryFamily& fam) {
    json units = json::array();
    for (const CMatrix& u : fam.units) units.push_back(matrix_to_json(u));
    return json{{"mode", fam.mode == StarMode::Transpose ? "transpose"
                                                         : "adjoint"},
                {"units", units}};
}

IsometryFamily family_from_json(const json& doc, StarMode mode) {
    require_members(doc, {"mode", "units"}, "isometry family");
    IsometryFamily fam;
    fam.mode = mode;
    for (const json& u : doc["units"]) {
        fam.units.push_back(matrix_from_json(u));
    }
    return fam;
}

namespace presets {

Quiver loop() { return kloops(1); }

Quiver kloops(int k) {
    if (k < 1) throw ValidationError("k must be at least 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= k; ++i) {
        arrows.push_back({"a" + std::to_string(i), 1, 1});
    }
    return Quiver(1, std::move(arrows));
}

Quiver parallel(int k) {
    if (k < 1) throw ValidationError("k must be at least 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= k; ++i) {
        arrows.push_back({"a" + std::to_string(i), 2, 1});
    }
    return Quiver(2, std::move(arrows));
}

Quiver star(int k) {
    if (k < 1) throw ValidationError("k must be at least 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= k; ++i) {
        arrows.push_back({"a" + std::to_string(i), i + 1, 1});
    }
    return Quiver(k + 1, std::move(arrows));
}

Quiver complete(int t) {
    if (t < 1) throw ValidationError("t must be at least 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            arrows.push_back(
                {"a" + std::to_string(i) + "_" + std::to_string(j), j, i});
        }
    }
    return Quiver(t, std::move(arrows));
}

} // namespace presets

} // namespace quiso
