// Command line front end for finite timed-metric spaces: validation, fixture
// generation, causal structure, null distance, two-sided distance bounds,
// gluing and convergence measurement.
//
// Exit codes: 0 success, 1 property violation, 2 input or usage error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tms/bounds.hpp"
#include "tms/causal.hpp"
#include "tms/covering.hpp"
#include "tms/errors.hpp"
#include "tms/generators.hpp"
#include "tms/gluing.hpp"
#include "tms/json_io.hpp"
#include "tms/nets.hpp"
#include "tms/null_distance.hpp"
#include "tms/space.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    return Format::Table;
}

int cmd_validate(const std::string& path) {
    tms::TimedMetricSpace space = tms::load_space(path);
    tms::ValidationReport report = tms::validate(space);
    if (report.ok()) {
        std::cout << "valid: " << space.size() << " points, diam " << space.diam()
                  << ", tau_max " << space.tau_max() << "\n";
        return kExitOk;
    }
    std::cout << report.str();
    return kExitViolation;
}

struct GenerateArgs {
    std::string kind;
    std::string out;
    int j = 2;
    int n = 4;
    int steps = 4;
    int cycle = 8;
    std::string hop = "1/8";
    int dim = 2;
    long den = 8;
    std::uint64_t seed = 0;
    bool literal_paper = false;
    std::string scalar = "rational";
    double tol = 1e-9;
};

tms::TimedMetricSpace to_float_mode(const tms::TimedMetricSpace& s, double tol) {
    const int n = s.size();
    tms::Matrix<tms::Scalar> dist(n, n, tms::Scalar::real(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) dist(i, k) = tms::Scalar::real(s.dist(i, k).to_double());
    std::vector<tms::Scalar> tau;
    for (int i = 0; i < n; ++i) tau.push_back(tms::Scalar::real(s.tau(i).to_double()));
    return tms::TimedMetricSpace(
        tms::MetricSpace(s.metric().labels(), std::move(dist),
                         tms::NumericPolicy::float_mode(tol)),
        std::move(tau));
}

int cmd_generate(const GenerateArgs& args) {
    tms::TimedMetricSpace space = [&] {
        if (args.kind == "zigzag") return tms::gen::zigzag(args.j, args.literal_paper);
        if (args.kind == "chain") return tms::gen::chain(args.n);
        if (args.kind == "random")
            return tms::gen::random_box(args.n, args.dim, args.den, args.seed);
        if (args.kind == "max_product")
            return tms::gen::max_product_grid(
                args.steps, tms::gen::cycle(args.cycle, tms::Scalar::parse(args.hop)));
        throw tms::ParseError("unknown generator kind '" + args.kind + "'");
    }();
    if (args.scalar == "float") space = to_float_mode(space, args.tol);

    tms::MetaEntries meta{{"kind", args.kind}, {"seed", std::to_string(args.seed)}};
    tms::ValidationReport report = tms::validate(space);
    if (!report.ok()) {
        std::cerr << "generated space failed validation:\n" << report.str();
        return kExitViolation;
    }
    if (args.out.empty()) {
        std::cout << tms::space_to_json_text(space, meta);
    } else {
        tms::save_space(space, args.out, meta);
        std::cout << "# seed=" << args.seed << "\n"
                  << "wrote " << args.out << " (" << space.size() << " points)\n";
    }
    return kExitOk;
}

int cmd_causal(const std::string& path, Format format) {
    tms::TimedMetricSpace space = tms::load_space(path);
    tms::require_valid(space);
    tms::CausalRelation rel = tms::causal_matrix(space);
    tms::ValidationReport order = tms::check_partial_order(rel);
    const int n = rel.size();
    if (format == Format::Json) {
        std::cout << "{\"order_ok\": " << (order.ok() ? "true" : "false") << ", \"rel\": [";
        for (int i = 0; i < n; ++i) {
            std::cout << (i ? "," : "") << "[";
            for (int j = 0; j < n; ++j) std::cout << (j ? "," : "") << (rel.rel(i, j) ? 1 : 0);
            std::cout << "]";
        }
        std::cout << "]}\n";
    } else if (format == Format::Csv) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) std::cout << (j ? "," : "") << (rel.rel(i, j) ? 1 : 0);
            std::cout << "\n";
        }
        std::cout << "# partial order: " << (order.ok() ? "ok" : "violated") << "\n";
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) std::cout << (rel.rel(i, j) ? '1' : '.');
            std::cout << "\n";
        }
        std::cout << "partial order: " << (order.ok() ? "ok" : "violated") << "\n";
        if (!order.ok()) std::cout << order.str();
    }
    return order.ok() ? kExitOk : kExitViolation;
}

int cmd_null(const std::string& path, Format format, bool chains) {
    tms::TimedMetricSpace space = tms::load_space(path);
    tms::require_valid(space);
    tms::NullDistanceResult nd = tms::null_distance(space);
    tms::CausalNullCheck check = tms::is_causally_null(space);
    tms::Components comp = tms::chain_connectivity(space);
    if (format == Format::Json) {
        std::cout << tms::null_result_to_json_text(space, nd, check, comp, chains);
        return kExitOk;
    }
    const int n = space.size();
    const char* sep = format == Format::Csv ? "," : " ";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) std::cout << (j ? sep : "") << nd.dhat(i, j).str();
        std::cout << "\n";
    }
    const char* prefix = format == Format::Csv ? "# " : "";
    std::cout << prefix << "components: " << comp.count << "\n";
    std::cout << prefix << "causally null: " << (check.causally_null ? "true" : "false")
              << "\n";
    if (!check.causally_null)
        std::cout << prefix << "counterexample: (" << check.witness_i << ","
                  << check.witness_j << ")\n";
    return kExitOk;
}

int cmd_tgh(const std::string& path_x, const std::string& path_y, bool exact, int budget,
            std::uint64_t seed, Format format) {
    tms::TimedMetricSpace x = tms::load_space(path_x);
    tms::TimedMetricSpace y = tms::load_space(path_y);
    tms::CertifyOptions opts;
    opts.exact = exact;
    opts.search.restarts = budget;
    opts.search.seed = seed;
    tms::BoundCertificate cert = tms::certify_bounds(x, y, opts);
    if (format == Format::Json) {
        std::cerr << "# seed=" << seed << "\n";
        std::cout << tms::certificate_to_json_text(cert);
    } else if (format == Format::Csv) {
        std::cout << "lower,upper,exact\n"
                  << cert.lower << "," << cert.upper << "," << (cert.exact ? 1 : 0) << "\n";
    } else {
        std::cout << "# seed=" << seed << "\n";
        std::cout << "lower " << cert.lower << "  upper " << cert.upper << "  exact "
                  << (cert.exact ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_glue(const std::string& p1, const std::string& p2, const std::string& p3,
             int budget, std::uint64_t seed, Format format) {
    tms::TimedMetricSpace x1 = tms::load_space(p1);
    tms::TimedMetricSpace x2 = tms::load_space(p2);
    tms::TimedMetricSpace x3 = tms::load_space(p3);
    tms::SearchOptions opts;
    opts.restarts = budget;
    opts.seed = seed;
    tms::TriangleReport report = tms::triangle_check(x1, x2, x3, opts);
    if (format == Format::Csv) {
        std::cout << "u12,u23,u13,u13_direct,slack,holds\n"
                  << report.u12 << "," << report.u23 << "," << report.u13 << ","
                  << report.u13_direct << "," << report.slack << ","
                  << (report.holds ? 1 : 0) << "\n";
    } else {
        std::cout << "# seed=" << seed << "\n";
        std::cout << "u12 " << report.u12 << "  u23 " << report.u23 << "  u13 " << report.u13
                  << "  direct " << report.u13_direct << "  slack " << report.slack << "\n";
        std::cout << "triangle holds: " << (report.holds ? "true" : "false") << "\n";
        std::cout << "glued checks: " << (report.glued_checks.ok() ? "ok" : "violated")
                  << "\n";
        if (!report.glued_checks.ok()) std::cout << report.glued_checks.str();
    }
    return report.holds && report.glued_checks.ok() ? kExitOk : kExitViolation;
}

int cmd_converge(const std::string& manifest_path, int depth, Format format) {
    tms::Manifest manifest = tms::load_manifest(manifest_path);
    std::vector<tms::TimedMetricSpace> spaces;
    spaces.reserve(manifest.spaces.size());
    for (const std::string& p : manifest.spaces) spaces.push_back(tms::load_space(p));
    tms::TimedMetricSpace limit = tms::load_space(manifest.limit);
    for (const auto& s : spaces) tms::require_valid(s);
    tms::require_valid(limit);

    std::vector<const tms::TimedMetricSpace*> ptrs;
    for (const auto& s : spaces) ptrs.push_back(&s);
    int use_depth = depth > 0 ? depth : manifest.depth;
    tms::ConvergenceRun run = tms::run_convergence(ptrs, limit, use_depth);

    tms::CausalNullCheck limit_null = tms::is_causally_null(limit);
    if (format == Format::Json) {
        std::cout << "{\"depth\": " << run.report.depth << ", \"resolution\": \""
                  << run.report.resolution << "\", \"rows\": [";
        for (std::size_t i = 0; i < run.report.rows.size(); ++i) {
            const auto& r = run.report.rows[i];
            std::cout << (i ? "," : "") << "{\"j\": " << r.j << ", \"d_H\": \""
                      << r.hausdorff << "\", \"sup_tau\": \"" << r.sup_tau_dev
                      << "\", \"sup_dist\": \"" << r.sup_dist_dev << "\"}";
        }
        std::cout << "], \"limit_causally_null\": "
                  << (limit_null.causally_null ? "true" : "false") << "}\n";
    } else {
        std::cout << "j,d_H,sup_A_tau,sup_A_d\n";
        for (const auto& r : run.report.rows)
            std::cout << r.j << "," << r.hausdorff << "," << r.sup_tau_dev << ","
                      << r.sup_dist_dev << "\n";
        std::cout << "# depth=" << run.report.depth << " resolution="
                  << run.report.resolution << "\n";
        std::cout << "# limit causally null: "
                  << (limit_null.causally_null ? "true" : "false") << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite timed-metric spaces: causal structure, null distance, "
                 "certified distance bounds, gluing, convergence"};
    app.require_subcommand(1);

    std::string path, path_y, path_z;
    std::string format_text = "table";
    bool exact = false;
    bool chains = false;
    int budget = 8;
    int depth = 0;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "check the axioms of a space file");
    validate->add_option("file", path)->required();

    GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "write a fixture space");
    generate->add_option("kind", gen_args.kind, "zigzag|chain|random|max_product")
        ->required();
    generate->add_option("--out", gen_args.out, "output file (stdout when omitted)");
    generate->add_option("--j", gen_args.j, "zigzag parameter");
    generate->add_option("--n", gen_args.n, "point count (chain, random)");
    generate->add_option("--steps", gen_args.steps, "time grid steps (max_product)");
    generate->add_option("--cycle", gen_args.cycle, "cycle size (max_product)");
    generate->add_option("--hop", gen_args.hop, "cycle hop distance (max_product)");
    generate->add_option("--dim", gen_args.dim, "box dimension (random)");
    generate->add_option("--den", gen_args.den, "coordinate denominator (random)");
    generate->add_option("--seed", gen_args.seed, "random seed");
    generate->add_flag("--literal-paper", gen_args.literal_paper,
                       "zigzag: place both point families at height 0");
    generate->add_option("--scalar", gen_args.scalar, "rational|float");
    generate->add_option("--tol", gen_args.tol, "float-mode tolerance");

    auto* causal = app.add_subcommand("causal", "causal relation and partial-order check");
    causal->add_option("file", path)->required();
    causal->add_option("--format", format_text, "table|csv|json");

    auto* null_cmd = app.add_subcommand("null", "null distance and causally-null verdict");
    null_cmd->add_option("file", path)->required();
    null_cmd->add_option("--format", format_text, "table|csv|json");
    null_cmd->add_flag("--chains", chains, "include witness chains (json)");

    auto* tgh = app.add_subcommand("tgh", "two-sided timed Gromov-Hausdorff bounds");
    tgh->add_option("fileX", path)->required();
    tgh->add_option("fileY", path_y)->required();
    tgh->add_flag("--exact", exact, "refuse instead of falling back to local search");
    tgh->add_option("--budget", budget, "local search restarts");
    tgh->add_option("--seed", seed, "search seed");
    tgh->add_option("--format", format_text, "table|csv|json");

    auto* glue_cmd = app.add_subcommand("glue", "triangle inequality via gluing");
    glue_cmd->add_option("file1", path)->required();
    glue_cmd->add_option("file2", path_y)->required();
    glue_cmd->add_option("file3", path_z)->required();
    glue_cmd->add_option("--budget", budget, "local search restarts");
    glue_cmd->add_option("--seed", seed, "search seed");
    glue_cmd->add_option("--format", format_text, "table|csv|json");

    auto* converge = app.add_subcommand("converge", "convergence report for a manifest");
    converge->add_option("manifest", path)->required();
    converge->add_option("--depth", depth, "hierarchy depth override");
    converge->add_option("--format", format_text, "table|csv|json");

    CLI11_PARSE(app, argc, argv);

    try {
        Format format = parse_format(format_text);
        if (validate->parsed()) return cmd_validate(path);
        if (generate->parsed()) return cmd_generate(gen_args);
        if (causal->parsed()) return cmd_causal(path, format);
        if (null_cmd->parsed()) return cmd_null(path, format, chains);
        if (tgh->parsed()) return cmd_tgh(path, path_y, exact, budget, seed, format);
        if (glue_cmd->parsed()) return cmd_glue(path, path_y, path_z, budget, seed, format);
        if (converge->parsed()) return cmd_converge(path, depth, format);
    } catch (const tms::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tms::Refusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitInput;
}
