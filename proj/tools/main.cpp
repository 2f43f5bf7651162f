// Command-line surface for quiver-representation isometry checks.
//
// Exit codes: 0 agree-up-to-bound, 1 distinguished, 2 usage/input error,
// 3 enumeration budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "quiso/corollaries.hpp"
#include "quiso/io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitAgree = 0;
constexpr int kExitDistinguished = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

quiso::Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw quiso::ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return quiso::parse_problem_text(buf.str());
}

quiso::StarMode parse_star(const std::string& s) {
    if (s == "adjoint") return quiso::StarMode::ConjugateTranspose;
    if (s == "transpose") return quiso::StarMode::Transpose;
    throw quiso::ValidationError("--star must be 'adjoint' or 'transpose'");
}

quiso::BoundFunction parse_bound(const std::string& s) {
    if (s == "pearcy") return quiso::BoundFunction::Pearcy;
    if (s == "laffey") return quiso::BoundFunction::Laffey;
    if (s == "pappacena") return quiso::BoundFunction::Pappacena;
    if (s == "nsq") return quiso::BoundFunction::NSquared;
    throw quiso::ValidationError(
        "bound must be one of pearcy, laffey, pappacena, nsq");
}

struct CheckArgs {
    std::string path_a, path_b;
    std::string star = "adjoint";
    std::string bound = "nsq";
    int max_len = -1;
    double rtol = 1e-9;
    double atol = 1e-12;
    std::uint64_t budget = quiso::kDefaultCycleBudget;
    bool certify_transpose = false;
};

int run_check(const CheckArgs& args) {
    const quiso::Problem a = load_problem(args.path_a);
    const quiso::Problem b = load_problem(args.path_b);
    if (!quiso::same_quiver(a.rep.quiver, b.rep.quiver)) {
        throw quiso::ValidationError("the two files describe different quivers");
    }
    if (a.rep.dims != b.rep.dims) {
        for (int v = 1; v <= a.rep.quiver.vertex_count(); ++v) {
            if (v > std::ssize(b.rep.dims) || a.rep.dim(v) != b.rep.dim(v)) {
                throw quiso::ValidationError("dimension mismatch at vertex " +
                                             std::to_string(v));
            }
        }
        throw quiso::ValidationError("dimension vectors differ");
    }
    quiso::DecideOptions opts;
    opts.mode = parse_star(args.star);
    opts.bound = parse_bound(args.bound);
    if (args.max_len > 0) opts.max_len = args.max_len;
    opts.rtol = args.rtol;
    opts.atol = args.atol;
    opts.budget = args.budget;
    opts.certify_transpose = args.certify_transpose;

    const quiso::IsometryVerdict v = quiso::decide_isometry(a.rep, b.rep, opts);
    std::cout << quiso::verdict_to_json(v).dump(2) << "\n";
    return v.agree ? kExitAgree : kExitDistinguished;
}

struct SignatureArgs {
    std::string path;
    std::string star = "adjoint";
    std::string format = "text";
    int max_len = 4;
    std::uint64_t budget = quiso::kDefaultCycleBudget;
};

int run_signature(const SignatureArgs& args) {
    const quiso::Problem p = load_problem(args.path);
    const quiso::TraceSignature sig = quiso::compute_signature(
        p.rep, parse_star(args.star), args.max_len, args.budget);
    if (args.format == "json") {
        json out = json::array();
        for (std::size_t i = 0; i < sig.cycles.size(); ++i) {
            out.push_back({{"cycle", sig.cycles[i].to_string()},
                           {"trace", {sig.values[i].real(), sig.values[i].imag()}},
                           {"scale", sig.scales[i]}});
        }
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "text") {
        for (std::size_t i = 0; i < sig.cycles.size(); ++i) {
            std::cout << sig.cycles[i].to_string() << "\t"
                      << sig.values[i].real() << "\t" << sig.values[i].imag()
                      << "\t" << sig.scales[i] << "\n";
        }
    } else {
        throw quiso::ValidationError("--format must be 'text' or 'json'");
    }
    return kExitAgree;
}

int run_reduce(const std::string& path) {
    const quiso::Problem p = load_problem(path);
    const quiso::ReductionMatrix mq = quiso::build_MQ(p.rep);
    json out{{"size", mq.matrix.rows()},
             {"matrix", quiso::matrix_to_json(mq.matrix)},
             {"blocks", quiso::template_sidecar(mq.tpl)}};
    std::cout << out.dump(2) << "\n";
    return kExitAgree;
}

int run_bound(const std::string& path, const std::string& bound_name) {
    const quiso::Problem p = load_problem(path);
    const int r = quiso::min_r(p.rep.quiver);
    const long long n = (r + 2) * p.rep.total_dim();
    const long long b = quiso::cycle_length_bound(p.rep.quiver, p.rep.dims,
                                                  parse_bound(bound_name));
    std::cout << json{{"r", r}, {"n", n}, {"bound", b}}.dump(2) << "\n";
    return kExitAgree;
}

struct GenArgs {
    std::string quiver_path;
    std::string preset;
    std::vector<Eigen::Index> dims;
    std::uint64_t seed = 0;
    std::string field = "complex";
};

quiso::Quiver preset_quiver(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    int arg = 0;
    if (colon != std::string::npos) {
        try {
            arg = std::stoi(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw quiso::ValidationError("bad preset parameter in '" + spec + "'");
        }
    }
    if (name == "loop") return quiso::presets::loop();
    if (name == "kloops") return quiso::presets::kloops(arg);
    if (name == "parallel") return quiso::presets::parallel(arg);
    if (name == "star") return quiso::presets::star(arg);
    if (name == "complete") return quiso::presets::complete(arg);
    throw quiso::ValidationError("unknown preset '" + name + "'");
}

int run_gen(const GenArgs& args) {
    if (args.quiver_path.empty() == args.preset.empty()) {
        throw quiso::ValidationError(
            "exactly one of --quiver and --preset is required");
    }
    quiso::Quiver q = [&] {
        if (!args.preset.empty()) return preset_quiver(args.preset);
        std::ifstream in(args.quiver_path);
        if (!in) {
            throw quiso::ValidationError("cannot open '" + args.quiver_path + "'");
        }
        json doc;
        try {
            in >> doc;
        } catch (const json::parse_error& e) {
            throw quiso::ValidationError(std::string("invalid JSON: ") + e.what());
        }
        return quiso::quiver_from_json(doc);
    }();
    const quiso::FieldMode field = args.field == "real"
                                       ? quiso::FieldMode::Real
                                       : quiso::FieldMode::Complex;
    if (args.field != "real" && args.field != "complex") {
        throw quiso::ValidationError("--field must be 'complex' or 'real'");
    }
    quiso::Problem p{quiso::random_representation(q, args.dims, args.seed, field),
                     field};
    std::cout << quiso::serialize_problem(p).dump(2) << "\n";
    return kExitAgree;
}

struct TransformArgs {
    std::string path;
    std::string star = "adjoint";
    std::uint64_t seed = 0;
    std::string emit_family;
};

int run_transform(const TransformArgs& args) {
    const quiso::Problem p = load_problem(args.path);
    const quiso::StarMode mode = parse_star(args.star);
    const quiso::IsometryFamily fam =
        quiso::random_isometry_family(p.rep.dims, args.seed, mode, p.field);
    quiso::Problem out{quiso::transform(p.rep, fam), p.field};
    if (!args.emit_family.empty()) {
        std::ofstream f(args.emit_family);
        if (!f) {
            throw quiso::ValidationError("cannot write '" + args.emit_family + "'");
        }
        f << quiso::family_to_json(fam).dump(2) << "\n";
    }
    std::cout << quiso::serialize_problem(out).dump(2) << "\n";
    return kExitAgree;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isometry of quiver representations via traces of oriented "
                 "cycles in the doubled quiver"};
    app.require_subcommand(1);

    CheckArgs check;
    CLI::App* c = app.add_subcommand(
        "check", "Compare two representation files for isometry");
    c->add_option("fileA", check.path_a)->required();
    c->add_option("fileB", check.path_b)->required();
    c->add_option("--star", check.star, "adjoint|transpose");
    c->add_option("--max-len", check.max_len, "explicit cycle-length cap");
    c->add_option("--bound", check.bound, "pearcy|laffey|pappacena|nsq");
    c->add_option("--rtol", check.rtol);
    c->add_option("--atol", check.atol);
    c->add_option("--budget", check.budget);
    c->add_flag("--certify-transpose", check.certify_transpose,
                "let the word-length bounds certify in transpose mode");

    SignatureArgs sig;
    CLI::App* s = app.add_subcommand("signature",
                                     "List cycle traces of one representation");
    s->add_option("file", sig.path)->required();
    s->add_option("--star", sig.star, "adjoint|transpose");
    s->add_option("--max-len", sig.max_len);
    s->add_option("--format", sig.format, "text|json");
    s->add_option("--budget", sig.budget);

    std::string reduce_path;
    CLI::App* r = app.add_subcommand(
        "reduce", "Emit the single-matrix reduction with its block grid");
    r->add_option("file", reduce_path)->required();

    std::string bound_path, bound_name = "nsq";
    CLI::App* b = app.add_subcommand("bound",
                                     "Print the certifying cycle-length bound");
    b->add_option("file", bound_path)->required();
    b->add_option("--phi", bound_name, "pearcy|laffey|pappacena|nsq");

    GenArgs gen;
    CLI::App* g = app.add_subcommand("gen", "Generate a random representation");
    g->add_option("--quiver", gen.quiver_path, "path to a quiver JSON file");
    g->add_option("--preset", gen.preset,
                  "loop|kloops:k|parallel:k|star:k|complete:t");
    g->add_option("--dims", gen.dims, "dimension per vertex")
        ->required()
        ->delimiter(',');
    g->add_option("--seed", gen.seed);
    g->add_option("--field", gen.field, "complex|real");

    TransformArgs tr;
    CLI::App* t = app.add_subcommand(
        "transform", "Apply a random isometry family to a representation");
    t->add_option("file", tr.path)->required();
    t->add_option("--star", tr.star, "adjoint|transpose");
    t->add_option("--seed", tr.seed);
    t->add_option("--emit-family", tr.emit_family,
                  "also write the witness family to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (c->parsed()) return run_check(check);
        if (s->parsed()) return run_signature(sig);
        if (r->parsed()) return run_reduce(reduce_path);
        if (b->parsed()) return run_bound(bound_path, bound_name);
        if (g->parsed()) return run_gen(gen);
        if (t->parsed()) return run_transform(tr);
    } catch (const quiso::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
