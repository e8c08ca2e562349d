#ifndef KCOLOR_JSON_IO_HPP
#define KCOLOR_JSON_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "kcolor/coloring.hpp"
#include "kcolor/cut.hpp"
#include "kcolor/solver.hpp"

namespace kcolor {

/// {"k": int, "colors": [int, ...]} — colors 1-based, array indexed by
/// 0-based vertex id.
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(std::string_view text);

/// {"k": int, "parts": [[vertex ids], ...]}
std::string partition_to_json(const Partition& p);
Partition partition_from_json(std::string_view text);

/// One JSON object per line and step: {"step", "vertex", "from", "to",
/// "sigma_before", "sigma_after", "mix_before", "mix_after"}; rationals as
/// "num/den" strings.
void write_trace_jsonl(const SolveTrace& trace, std::ostream& out);
std::string trace_jsonl_string(const SolveTrace& trace);

} // namespace kcolor

#endif
