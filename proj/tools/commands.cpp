#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "kcolor/cut.hpp"
#include "kcolor/errors.hpp"
#include "kcolor/generators.hpp"
#include "kcolor/graph_io.hpp"
#include "kcolor/json_io.hpp"
#include "kcolor/metrics.hpp"
#include "kcolor/oracle.hpp"
#include "kcolor/rational.hpp"
#include "kcolor/solver.hpp"

namespace kcolor::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << content;
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

bool looks_like_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos)
            continue;
        if (line[pos] == 'c')
            continue;
        return line[pos] == 'p' || line[pos] == 'e';
    }
    return false;
}

Graph load_graph(const std::string& path, const std::string& format,
                 std::vector<std::string>* warnings) {
    std::string text = read_file(path);
    std::string fmt = format;
    if (fmt == "auto") {
        std::string ext = fs::path(path).extension().string();
        if (ext == ".col" || ext == ".dimacs")
            fmt = "dimacs";
        else if (ext == ".edges" || ext == ".el")
            fmt = "edgelist";
        else
            fmt = looks_like_dimacs(text) ? "dimacs" : "edgelist";
    }
    if (fmt == "dimacs")
        return parse_dimacs(text, warnings);
    if (fmt == "edgelist")
        return parse_edge_list(text);
    throw std::invalid_argument("unknown graph format '" + format + "'");
}

WeightVector parse_weights(const std::string& spec) {
    std::vector<Rational> entries;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ','))
        entries.push_back(Rational::parse(token));
    return WeightVector(std::move(entries));
}

SolveConfig make_config(const std::string& init, std::uint64_t seed) {
    if (init == "uniform")
        return SolveConfig::uniform_init();
    if (init == "random")
        return SolveConfig::random_init(seed);
    throw std::invalid_argument("unknown init mode '" + init + "' (want uniform|random)");
}

json weights_json(const WeightVector& p) {
    json entries = json::array();
    for (const Rational& w : p.entries())
        entries.push_back(w.str());
    return entries;
}

json violations_json(const VerifyReport& report) {
    json list = json::array();
    for (const Violation& v : report.violations) {
        json item;
        item["vertex"] = v.vertex;
        item["same_color_neighbors"] = v.same_color_neighbors;
        item["threshold"] = v.threshold.str();
        list.push_back(std::move(item));
    }
    return list;
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings)
        std::cerr << "warning: " << w << '\n';
}

} // namespace

int cmd_gen(const GenOptions& opt) {
    Graph g;
    if (opt.has_gnp) {
        g = gen_gnp(opt.gnp_n, opt.gnp_p, opt.seed);
    } else if (!opt.family.empty()) {
        Family family = family_from_name(opt.family);
        if (family != Family::Petersen && opt.n < 1)
            throw std::invalid_argument("--family " + opt.family + " requires --n >= 1");
        g = gen_named(family, opt.n);
    } else {
        throw std::invalid_argument("gen: one of --family or --gnp is required");
    }
    std::string text;
    if (opt.format == "dimacs")
        text = dimacs_string(g);
    else if (opt.format == "edgelist")
        text = edge_list_string(g);
    else
        throw std::invalid_argument("unknown graph format '" + opt.format + "'");
    write_file(opt.output, text);
    std::cerr << "wrote " << opt.output << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
              << ")\n";
    return exit_ok;
}

int cmd_color(const ColorOptions& opt) {
    if ((opt.k > 0) == !opt.weights.empty())
        throw std::invalid_argument("color: exactly one of --k or --weights is required");
    std::vector<std::string> warnings;
    Graph g = load_graph(opt.input, opt.format, &warnings);
    print_warnings(warnings);
    SolveConfig cfg = make_config(opt.init, opt.seed);

    Stopwatch watch;
    SolveResult solved;
    std::optional<WeightVector> weights;
    bool uniform_mode = opt.k > 0;
    if (uniform_mode) {
        solved = integrated_coloring(g, opt.k, cfg);
    } else {
        weights = parse_weights(opt.weights);
        solved = proportional_coloring(g, *weights, cfg);
    }
    double elapsed = watch.elapsed_ms();

    // The verdict is recomputed from scratch, not taken from the solver.
    VerifyReport report = uniform_mode ? verify_integrated(g, solved.coloring, opt.k)
                                       : verify_proportional(g, solved.coloring, *weights);

    long long mixing = mixing_number(g, solved.coloring);
    json out;
    out["input"] = opt.input;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["k"] = solved.coloring.k;
    out["weights"] = weights ? weights_json(*weights) : json();
    out["init"] = opt.init;
    out["seed"] = opt.seed;
    out["coloring"] = json::parse(coloring_to_json(solved.coloring));
    out["mixing_number"] = mixing;
    if (uniform_mode) {
        long long bound = mixed_edge_lower_bound(g.edge_count(), opt.k).ceil();
        out["bound"] = bound;
        out["bound_satisfied"] = mixing >= bound;
    } else {
        out["bound"] = json();
        out["bound_satisfied"] = json();
    }
    out["steps"] = solved.trace.steps.size();
    out["elapsed_ms"] = elapsed;
    out["verified"] = report.ok();
    std::cout << out.dump() << '\n';

    if (!opt.trace_path.empty())
        write_file(opt.trace_path, trace_jsonl_string(solved.trace));
    if (!opt.coloring_out.empty())
        write_file(opt.coloring_out, coloring_to_json(solved.coloring) + "\n");
    return report.ok() ? exit_ok : exit_violation;
}

int cmd_verify(const VerifyOptions& opt) {
    std::vector<std::string> warnings;
    Graph g = load_graph(opt.input, opt.format, &warnings);
    print_warnings(warnings);
    Coloring c = coloring_from_json(read_file(opt.coloring_path));
    check_coloring(g, c);

    VerifyReport report;
    std::string description;
    if (opt.mode == "integrated") {
        int k = opt.k > 0 ? opt.k : c.k;
        report = verify_integrated(g, c, k);
        description = "integrated " + std::to_string(k) + "-coloring";
    } else if (opt.mode == "proportional") {
        if (opt.weights.empty())
            throw std::invalid_argument("verify --mode proportional requires --weights");
        WeightVector p = parse_weights(opt.weights);
        report = verify_proportional(g, c, p);
        description = "proportional coloring with weights " + opt.weights;
    } else if (opt.mode == "defective") {
        report = verify_defective(g, c, opt.u);
        description = "(" + std::to_string(c.k) + ", " + std::to_string(opt.u) + ")-coloring";
    } else if (opt.mode == "proper") {
        report = verify_proper(g, c);
        description = "proper coloring";
    } else if (opt.mode == "unfriendly") {
        report = verify_unfriendly_partition(g, c);
        description = "unfriendly partition";
    } else {
        throw std::invalid_argument(
            "unknown mode '" + opt.mode +
            "' (want integrated|proportional|defective|proper|unfriendly)");
    }

    if (opt.json) {
        json out;
        out["mode"] = opt.mode;
        out["ok"] = report.ok();
        out["violations"] = violations_json(report);
        std::cout << out.dump() << '\n';
    } else if (report.ok()) {
        std::cout << "OK: " << description << " holds at every vertex\n";
    } else {
        std::cout << "FAIL: " << description << " violated at " << report.violations.size()
                  << " vertex(es)\n";
        for (const Violation& v : report.violations)
            std::cout << "  vertex " << v.vertex << ": " << v.same_color_neighbors
                      << " same-color neighbors > threshold " << v.threshold << '\n';
    }
    return report.ok() ? exit_ok : exit_violation;
}

int cmd_cut(const CutOptions& opt) {
    if (opt.k < 2)
        throw std::invalid_argument("cut: --k must be >= 2");
    std::vector<std::string> warnings;
    Graph g = load_graph(opt.input, opt.format, &warnings);
    print_warnings(warnings);
    SolveConfig cfg = make_config(opt.init, opt.seed);

    Stopwatch watch;
    CutResult result = k_max_cut(g, opt.k, cfg);
    double elapsed = watch.elapsed_ms();

    long long bound = mixed_edge_lower_bound(g.edge_count(), opt.k).ceil();
    bool satisfied = result.cut_edges >= bound;
    json out;
    out["input"] = opt.input;
    out["n"] = g.vertex_count();
    out["m"] = g.edge_count();
    out["k"] = opt.k;
    out["cut_edges"] = result.cut_edges;
    out["bound"] = bound;
    out["bound_satisfied"] = satisfied;
    out["partition"] = json::parse(partition_to_json(result.partition));
    out["elapsed_ms"] = elapsed;
    std::cout << out.dump() << '\n';

    if (!opt.partition_out.empty())
        write_file(opt.partition_out, partition_to_json(result.partition) + "\n");
    return satisfied ? exit_ok : exit_violation;
}

int cmd_oracle(const OracleOptions& opt) {
    std::vector<std::string> warnings;
    Graph g = load_graph(opt.input, opt.format, &warnings);
    print_warnings(warnings);
    OracleLimit lim{opt.limit};

    json out;
    out["input"] = opt.input;
    out["check"] = opt.check;
    bool ok = true;

    if (opt.check == "exists") {
        if (opt.k < 1)
            throw std::invalid_argument("oracle --check exists requires --k");
        IntegratedSearchResult result = exhaustive_integrated_search(g, opt.k, lim);
        out["k"] = opt.k;
        out["exists"] = result.exists;
        out["valid_count"] = result.valid_count;
        out["witness"] = result.witness ? json::parse(coloring_to_json(*result.witness)) : json();
        ok = result.exists;
        if (opt.compare) {
            SolveResult solved = integrated_coloring(g, opt.k);
            bool solver_ok = verify_integrated(g, solved.coloring, opt.k).ok();
            out["solver_verified"] = solver_ok;
            ok = ok && solver_ok;
        }
    } else if (opt.check == "maxcut") {
        if (opt.k < 1)
            throw std::invalid_argument("oracle --check maxcut requires --k");
        long long exact = exact_max_cut(g, opt.k, lim);
        out["k"] = opt.k;
        out["max_cut"] = exact;
        if (opt.compare) {
            if (opt.k < 2)
                throw std::invalid_argument("comparison needs --k >= 2");
            CutResult heuristic = k_max_cut(g, opt.k);
            long long bound = mixed_edge_lower_bound(g.edge_count(), opt.k).ceil();
            out["heuristic_cut"] = heuristic.cut_edges;
            out["bound"] = bound;
            ok = bound <= heuristic.cut_edges && heuristic.cut_edges <= exact;
            out["agreement"] = ok;
        }
    } else if (opt.check == "minsigma") {
        if (opt.weights.empty())
            throw std::invalid_argument("oracle --check minsigma requires --weights");
        WeightVector p = parse_weights(opt.weights);
        MinSigmaResult result = min_sigma(g, p, lim);
        out["weights"] = weights_json(p);
        out["min_sigma"] = result.min_sigma.str();
        out["minimizer"] = json::parse(coloring_to_json(result.minimizer));
        out["minimizer_count"] = result.minimizer_count;
        bool minimizer_ok = verify_proportional(g, result.minimizer, p).ok();
        out["minimizer_proportional_ok"] = minimizer_ok;
        ok = minimizer_ok;
        if (opt.compare) {
            SolveResult solved = proportional_coloring(g, p);
            bool solver_ok = verify_proportional(g, solved.coloring, p).ok();
            out["solver_sigma"] = sigma(g, solved.coloring, p).str();
            out["solver_verified"] = solver_ok;
            ok = ok && solver_ok;
        }
    } else {
        throw std::invalid_argument("unknown check '" + opt.check +
                                    "' (want exists|maxcut|minsigma)");
    }
    std::cout << out.dump() << '\n';
    return ok ? exit_ok : exit_violation;
}

int cmd_bench(const BenchOptions& opt) {
    if (opt.ks.empty())
        throw std::invalid_argument("bench: --k list must not be empty");
    if (opt.seeds.empty())
        throw std::invalid_argument("bench: --seeds list must not be empty");
    if (!fs::is_directory(opt.corpus))
        throw std::invalid_argument("bench: corpus '" + opt.corpus + "' is not a directory");

    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(opt.corpus))
        if (entry.is_regular_file())
            files.push_back(entry.path().filename().string());
    std::sort(files.begin(), files.end());

    std::vector<int> ks = opt.ks;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::vector<std::uint64_t> seeds = opt.seeds;
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    std::ostringstream lines;
    long long runs = 0;
    long long verified = 0;
    long long bound_satisfied = 0;
    long long load_failures = 0;
    Rational max_step_ratio(0);

    for (const std::string& name : files) {
        std::string path = (fs::path(opt.corpus) / name).string();
        Graph g;
        try {
            g = load_graph(path, "auto", nullptr);
        } catch (const std::exception& e) {
            ++load_failures;
            json row;
            row["graph"] = name;
            row["status"] = "failed";
            row["error"] = e.what();
            lines << row.dump() << '\n';
            continue;
        }
        for (int k : ks) {
            for (std::uint64_t seed : seeds) {
                Stopwatch watch;
                SolveResult solved = integrated_coloring(g, k, SolveConfig::random_init(seed));
                double elapsed = watch.elapsed_ms();
                long long mixing = mixing_number(g, solved.coloring);
                long long bound = mixed_edge_lower_bound(g.edge_count(), k).ceil();
                bool run_verified = verify_integrated(g, solved.coloring, k).ok();
                bool run_bound_ok = mixing >= bound;
                Rational ratio(static_cast<long long>(solved.trace.steps.size()),
                               std::max(g.edge_count(), 1LL));
                max_step_ratio = std::max(max_step_ratio, ratio);

                json row;
                row["graph"] = name;
                row["k"] = k;
                row["seed"] = seed;
                row["status"] = "ok";
                row["n"] = g.vertex_count();
                row["m"] = g.edge_count();
                row["mixing_number"] = mixing;
                row["bound"] = bound;
                row["bound_satisfied"] = run_bound_ok;
                row["steps"] = solved.trace.steps.size();
                row["step_ratio"] = ratio.str();
                row["verified"] = run_verified;
                row["elapsed_ms"] = elapsed;
                lines << row.dump() << '\n';

                ++runs;
                verified += run_verified ? 1 : 0;
                bound_satisfied += run_bound_ok ? 1 : 0;
            }
        }
    }

    json summary;
    summary["summary"] = true;
    summary["runs"] = runs;
    summary["verified"] = verified;
    summary["bound_satisfied"] = bound_satisfied;
    summary["max_step_ratio"] = max_step_ratio.str();
    summary["load_failures"] = load_failures;
    lines << summary.dump() << '\n';

    write_file(opt.output, lines.str());
    std::cout << summary.dump() << '\n';

    bool all_ok = load_failures == 0 && verified == runs && bound_satisfied == runs;
    return all_ok ? exit_ok : exit_violation;
}

} // namespace kcolor::cli
