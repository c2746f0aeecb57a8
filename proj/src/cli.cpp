#include "perron/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "perron/errors.hpp"
#include "perron/verify.hpp"

namespace perron {

namespace fs = std::filesystem;

namespace {

int parse_alpha_iters(const std::string& policy) {
    if (policy == "ones") return 0;
    const std::string prefix = "optimize:";
    if (policy.rfind(prefix, 0) == 0) {
        try {
            std::size_t used = 0;
            int iters = std::stoi(policy.substr(prefix.size()), &used);
            if (used == policy.size() - prefix.size() && iters > 0) return iters;
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorKind::Parse, "alpha policy must be 'ones' or 'optimize:<iterations>'");
}

ConstructOptions construct_options(const RunConfig& c) {
    if (c.budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
    ConstructOptions o;
    o.mode = c.mode;
    o.shrink_floor = c.shrink_floor;
    o.budget = c.budget;
    o.alpha_iters = parse_alpha_iters(c.alpha);
    if (c.basis_file) o.basis_text = read_file(*c.basis_file);
    o.roots.max_bits = c.precision;
    o.primitive = c.primitive;
    o.assume_irreducible = c.assume_irreducible;
    return o;
}

IntPolynomial polynomial_of(const RunConfig& c) { return IntPolynomial::parse(c.polynomial); }

void emit(const RunConfig& c, const std::string& file, const Json& j, std::ostream& out) {
    const std::string text = dump(j);
    if (c.out_dir) atomic_write(fs::path(*c.out_dir) / file, text);
    out << text;
}

}  // namespace

Json config_json(const RunConfig& c) {
    return Json{{"command", c.command},
                {"polynomial", c.polynomial},
                {"mode", to_string(c.mode)},
                {"alpha", c.alpha},
                {"shrink_floor", static_cast<double>(c.shrink_floor)},
                {"budget", c.budget},
                {"precision", c.precision},
                {"basis", c.basis_file ? "user_basis" : "Z[lambda]"},
                {"seed", c.seed},
                {"assume_irreducible", c.assume_irreducible},
                {"primitive", c.primitive}};
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
    const IntPolynomial p = polynomial_of(c);
    require_irreducible(p, c.assume_irreducible);
    RootOptions roots;
    roots.max_bits = c.precision;
    FieldContext ctx = build_field_context(p, roots);
    emit(c, "analysis.json", field_json(ctx), out);
    return 0;
}

int cmd_construct(const RunConfig& c, std::ostream& out) {
    const Construction con = construct(polynomial_of(c), construct_options(c));
    const BoundReport bounds = theorem_bounds(con.lattice);
    const fs::path dir = c.out_dir ? fs::path(*c.out_dir) : fs::path(".");
    atomic_write(dir / "matrix.json", dump(matrix_json(con.matrix)));
    atomic_write(dir / "certificate.json", dump(certificate_json(con, bounds, config_json(c))));
    atomic_write(dir / "graph.dot", to_dot(to_edge_shift(con.matrix), c.dot_style));
    Json summary{{"dimension", con.matrix.rows()},
                 {"full_dimension", con.full_matrix.rows()},
                 {"cone_generators", con.cone.generators.size()},
                 {"shrink", static_cast<double>(con.cone.spec.shrink)},
                 {"period", con.periodicity.period},
                 {"primitive", con.periodicity.primitive},
                 {"matches_lambda", con.certificate.matches_lambda},
                 {"bound_disc", con.lattice.dim() >= 2 ? bounds.bound_disc.decimal() : "n/a"},
                 {"files", {"matrix.json", "certificate.json", "graph.dot"}}};
    out << dump(summary);
    return con.certificate.matches_lambda ? 0 : exit_code(ErrorKind::CertificationFailed);
}

int cmd_bound(const RunConfig& c, std::ostream& out) {
    ConstructOptions o = construct_options(c);
    const BoundReport report = theorem_bounds(prepare_lattice(polynomial_of(c), o));
    Json j = bound_json(report);
    j["construction_note"] =
        "paper_exact cones need an exhaustive semigroup scan that is only practical for the smallest fields; "
        "adaptive mode is the supported construction path";
    if (c.text) {
        if (c.out_dir) atomic_write(fs::path(*c.out_dir) / "bound.json", dump(j));
        out << render(report);
    } else {
        emit(c, "bound.json", j, out);
    }
    return 0;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
    const IntPolynomial p = polynomial_of(c);
    require_irreducible(p, c.assume_irreducible);
    RootOptions roots;
    roots.max_bits = c.precision;
    SearchOptions opt;
    opt.mode = c.search_mode;
    opt.n_max = c.n_max;
    opt.budget = c.budget;
    const SearchResult result = brute_force_dpf(build_field_context(p, roots), opt);
    emit(c, "search.json", search_json(result), out);
    return result.n_found ? 0 : exit_code(ErrorKind::NotFound);
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const fs::path dir = c.out_dir ? fs::path(*c.out_dir) : fs::path(".");
    const fs::path cert_path = c.certificate_path ? fs::path(*c.certificate_path) : dir / "certificate.json";
    const fs::path matrix_path = c.matrix_path ? fs::path(*c.matrix_path) : dir / "matrix.json";
    Json cert, matrix;
    try {
        cert = Json::parse(read_file(cert_path));
        matrix = Json::parse(read_file(matrix_path));
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    VerifyReport report;
    try {
        report = verify_certificate(cert, matrix);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("malformed certificate: ") + e.what());
    }
    out << dump(verify_json(report));
    return report.ok() ? 0 : exit_code(ErrorKind::VerificationFailed);
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == "analyze") return cmd_analyze(config, out);
        if (config.command == "construct") return cmd_construct(config, out);
        if (config.command == "bound") return cmd_bound(config, out);
        if (config.command == "search") return cmd_search(config, out);
        if (config.command == "verify") return cmd_verify(config, out);
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + config.command + "'");
    } catch (const Error& e) {
        Json diag{{"error", to_string(e.kind())}, {"message", e.what()}, {"exit_code", exit_code(e.kind())}};
        if (const auto* budget = dynamic_cast<const BudgetExceeded*>(&e)) diag["partial"] = budget->partial();
        if (config.out_dir) {
            try {
                atomic_write(fs::path(*config.out_dir) / "error.json", dump(diag));
            } catch (const Error&) {
            }
        }
        err << dump(diag);
        return exit_code(e.kind());
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral non-negative matrices with a prescribed Perron spectral radius"};
    app.require_subcommand(1);
    RunConfig config;
    std::string mode = "adaptive";
    std::string search_mode = "primitive";
    std::string dot_style = "labels";

    auto add_common = [&](CLI::App* sub, bool needs_poly) {
        auto* poly = sub->add_option("--poly", config.polynomial, "coefficients c0,c1,...,cd, constant term first");
        if (needs_poly) poly->required();
        sub->add_option("--precision", config.precision, "maximum working precision in bits")->check(CLI::Range(64u, 1u << 20));
        sub->add_option("--seed", config.seed, "recorded in outputs; every stage is deterministic");
        sub->add_option("--out-dir", config.out_dir, "directory for JSON and DOT outputs");
        sub->add_flag("--assume-irreducible", config.assume_irreducible, "skip the irreducibility gate in degree >= 4");
    };
    auto add_lattice = [&](CLI::App* sub) {
        sub->add_option("--alpha", config.alpha, "ones | optimize:<iterations>");
        sub->add_option("--basis-file", config.basis_file, "integral basis, one element per line in power coordinates");
    };

    auto* analyze = app.add_subcommand("analyze", "places, lambda and spectral ratio");
    add_common(analyze, true);

    auto* construct_cmd = app.add_subcommand("construct", "build and certify an irreducible matrix");
    add_common(construct_cmd, true);
    add_lattice(construct_cmd);
    construct_cmd->add_option("--mode", mode, "paper_exact | adaptive")->check(CLI::IsMember({"paper_exact", "adaptive"}));
    construct_cmd->add_option("--shrink-floor", config.shrink_floor, "smallest radius scale tried in adaptive mode");
    construct_cmd->add_option("--budget", config.budget, "zonotope points scanned before giving up");
    construct_cmd->add_flag("--primitive", config.primitive, "upgrade to a primitive matrix when lambda allows it");
    construct_cmd->add_option("--dot-style", dot_style, "labels | parallel")->check(CLI::IsMember({"labels", "parallel"}));

    auto* bound = app.add_subcommand("bound", "closed-form dimension bounds");
    add_common(bound, true);
    add_lattice(bound);
    bound->add_flag("--text", config.text, "human-readable rendering instead of JSON");

    auto* search = app.add_subcommand("search", "exhaustive search for the smallest witness");
    add_common(search, true);
    search->add_option("--n-max", config.n_max, "largest dimension searched");
    search->add_option("--budget", config.budget, "search-tree nodes before giving up");
    search->add_option("--search-mode", search_mode, "primitive | irreducible")
        ->check(CLI::IsMember({"primitive", "irreducible"}));

    auto* verify = app.add_subcommand("verify", "re-check construct outputs from the JSON files alone");
    add_common(verify, false);
    verify->add_option("--certificate", config.certificate_path, "certificate JSON (default <out-dir>/certificate.json)");
    verify->add_option("--matrix", config.matrix_path, "matrix JSON (default <out-dir>/matrix.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_code(ErrorKind::Parse);
    }
    config.command = app.get_subcommands().front()->get_name();
    config.mode = mode == "paper_exact" ? ConeMode::PaperExact : ConeMode::Adaptive;
    config.search_mode = search_mode == "irreducible" ? SearchMode::Irreducible : SearchMode::Primitive;
    config.dot_style = dot_style == "parallel" ? DotStyle::Parallel : DotStyle::Labels;
    return run_command(config, out, err);
}

}  // namespace perron
