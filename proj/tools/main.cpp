#include <exception>
#include <stdexcept>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "kcolor/errors.hpp"
#include "kcolor/oracle.hpp"

namespace cli = kcolor::cli;

int main(int argc, char** argv) {
    CLI::App app{"kcolor: integrated/proportional/defective graph coloring, k-max-cut, and "
                 "brute-force oracles"};
    app.require_subcommand(1);

    cli::GenOptions gen;
    std::vector<double> gnp_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
    gen_cmd->add_option("--family", gen.family, "complete|cycle|path|star|petersen");
    gen_cmd->add_option("--n", gen.n, "size parameter (star: number of leaves)");
    gen_cmd->add_option("--gnp", gnp_args, "Erdős–Rényi G(n, p)")->expected(2);
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed for --gnp");
    gen_cmd->add_option("--format", gen.format, "dimacs|edgelist")->capture_default_str();
    gen_cmd->add_option("--output", gen.output, "output path")->required();

    cli::ColorOptions color;
    auto* color_cmd = app.add_subcommand("color", "solve for a coloring and print a run report");
    color_cmd->add_option("--input", color.input, "graph file")->required();
    color_cmd->add_option("--format", color.format, "auto|dimacs|edgelist")->capture_default_str();
    color_cmd->add_option("--k", color.k, "color count (uniform thresholds |N(v)|/k)");
    color_cmd->add_option("--weights", color.weights, "comma-separated rationals, e.g. 1/4,3/4");
    color_cmd->add_option("--init", color.init, "uniform|random")->capture_default_str();
    color_cmd->add_option("--seed", color.seed, "seed for --init random");
    color_cmd->add_option("--trace", color.trace_path, "write the step trace as JSON lines");
    color_cmd->add_option("--coloring-out", color.coloring_out, "write the coloring as JSON");

    cli::VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring against a condition");
    verify_cmd->add_option("--input", verify.input, "graph file")->required();
    verify_cmd->add_option("--format", verify.format, "auto|dimacs|edgelist")
        ->capture_default_str();
    verify_cmd->add_option("--coloring", verify.coloring_path, "coloring JSON file")->required();
    verify_cmd->add_option("--mode", verify.mode, "integrated|proportional|defective|proper|unfriendly")
        ->required();
    verify_cmd->add_option("--k", verify.k, "color count for --mode integrated");
    verify_cmd->add_option("--weights", verify.weights, "weights for --mode proportional");
    verify_cmd->add_option("--u", verify.u, "defect bound for --mode defective");
    verify_cmd->add_flag("--json", verify.json, "machine-readable report");

    cli::CutOptions cut;
    auto* cut_cmd = app.add_subcommand("cut", "k-way cut from an integrated coloring");
    cut_cmd->add_option("--input", cut.input, "graph file")->required();
    cut_cmd->add_option("--format", cut.format, "auto|dimacs|edgelist")->capture_default_str();
    cut_cmd->add_option("--k", cut.k, "number of parts")->required();
    cut_cmd->add_option("--init", cut.init, "uniform|random")->capture_default_str();
    cut_cmd->add_option("--seed", cut.seed, "seed for --init random");
    cut_cmd->add_option("--partition-out", cut.partition_out, "write the partition as JSON");

    cli::OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "exact brute-force checks on small graphs");
    oracle_cmd->add_option("--input", oracle.input, "graph file")->required();
    oracle_cmd->add_option("--format", oracle.format, "auto|dimacs|edgelist")
        ->capture_default_str();
    oracle_cmd->add_option("--check", oracle.check, "exists|maxcut|minsigma")->required();
    oracle_cmd->add_option("--k", oracle.k, "color count for exists/maxcut");
    oracle_cmd->add_option("--weights", oracle.weights, "weights for minsigma");
    oracle_cmd->add_option("--limit", oracle.limit, "enumeration cap")->capture_default_str();
    oracle_cmd->add_flag("--compare", oracle.compare, "also run the solver and compare");

    cli::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "batch runs over a corpus directory");
    bench_cmd->add_option("--corpus", bench.corpus, "directory of graph files")->required();
    bench_cmd->add_option("--k", bench.ks, "color counts")->required()->delimiter(',');
    bench_cmd->add_option("--seeds", bench.seeds, "init seeds")->required()->delimiter(',');
    bench_cmd->add_option("--output", bench.output, "JSON-lines results path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::exit_ok : cli::exit_usage;
    }

    try {
        if (gen_cmd->parsed()) {
            if (gnp_args.size() == 2) {
                gen.has_gnp = true;
                gen.gnp_n = static_cast<int>(gnp_args[0]);
                if (gnp_args[0] < 0 || static_cast<double>(gen.gnp_n) != gnp_args[0])
                    throw std::invalid_argument("gen: --gnp N must be a non-negative integer");
                gen.gnp_p = gnp_args[1];
            }
            return cli::cmd_gen(gen);
        }
        if (color_cmd->parsed())
            return cli::cmd_color(color);
        if (verify_cmd->parsed())
            return cli::cmd_verify(verify);
        if (cut_cmd->parsed())
            return cli::cmd_cut(cut);
        if (oracle_cmd->parsed())
            return cli::cmd_oracle(oracle);
        if (bench_cmd->parsed())
            return cli::cmd_bench(bench);
        std::cerr << "error: no subcommand given\n";
        return cli::exit_usage;
    } catch (const kcolor::EnumerationLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_usage;
    } catch (const kcolor::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_violation;
    }
}
