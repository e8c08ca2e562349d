#ifndef KCOLOR_TOOLS_COMMANDS_HPP
#define KCOLOR_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kcolor::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;       // success / verified
inline constexpr int exit_violation = 1; // ran, but a verification failed
inline constexpr int exit_usage = 2;    // bad flags, bad input, precondition

struct GenOptions {
    std::string family;
    int n = 0;
    bool has_gnp = false;
    int gnp_n = 0;
    double gnp_p = 0.0;
    std::uint64_t seed = 0;
    std::string format = "dimacs";
    std::string output;
};

struct ColorOptions {
    std::string input;
    std::string format = "auto";
    int k = 0;
    std::string weights;
    std::string init = "uniform";
    std::uint64_t seed = 0;
    std::string trace_path;
    std::string coloring_out;
};

struct VerifyOptions {
    std::string input;
    std::string format = "auto";
    std::string coloring_path;
    std::string mode;
    int k = 0;
    std::string weights;
    long long u = 0;
    bool json = false;
};

struct CutOptions {
    std::string input;
    std::string format = "auto";
    int k = 0;
    std::string init = "uniform";
    std::uint64_t seed = 0;
    std::string partition_out;
};

struct OracleOptions {
    std::string input;
    std::string format = "auto";
    std::string check;
    int k = 0;
    std::string weights;
    std::uint64_t limit = 10'000'000;
    bool compare = false;
};

struct BenchOptions {
    std::string corpus;
    std::vector<int> ks;
    std::vector<std::uint64_t> seeds;
    std::string output;
};

int cmd_gen(const GenOptions& opt);
int cmd_color(const ColorOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_cut(const CutOptions& opt);
int cmd_oracle(const OracleOptions& opt);
int cmd_bench(const BenchOptions& opt);

} // namespace kcolor::cli

#endif
