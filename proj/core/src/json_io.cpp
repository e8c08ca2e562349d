#include "kcolor/json_io.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "kcolor/errors.hpp"

namespace kcolor {

using nlohmann::json;

namespace {

json parse_or_throw(std::string_view text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(std::string(what) + ": malformed JSON");
    return j;
}

} // namespace

std::string coloring_to_json(const Coloring& c) {
    json j;
    j["k"] = c.k;
    j["colors"] = c.colors;
    return j.dump();
}

Coloring coloring_from_json(std::string_view text) {
    json j = parse_or_throw(text, "coloring");
    if (!j.is_object() || !j.contains("k") || !j.contains("colors") ||
        !j["k"].is_number_integer() || !j["colors"].is_array())
        throw ParseError("coloring: expected {\"k\": int, \"colors\": [int, ...]}");
    Coloring c;
    c.k = j["k"].get<int>();
    for (const auto& entry : j["colors"]) {
        if (!entry.is_number_integer())
            throw ParseError("coloring: colors must be integers");
        int color = entry.get<int>();
        if (color < 1 || color > c.k)
            throw ParseError("coloring: color " + std::to_string(color) + " outside 1.." +
                             std::to_string(c.k));
        c.colors.push_back(color);
    }
    return c;
}

std::string partition_to_json(const Partition& p) {
    json j;
    j["k"] = p.k;
    j["parts"] = p.parts;
    return j.dump();
}

Partition partition_from_json(std::string_view text) {
    json j = parse_or_throw(text, "partition");
    if (!j.is_object() || !j.contains("k") || !j.contains("parts") ||
        !j["k"].is_number_integer() || !j["parts"].is_array())
        throw ParseError("partition: expected {\"k\": int, \"parts\": [[int, ...], ...]}");
    Partition p;
    p.k = j["k"].get<int>();
    for (const auto& part : j["parts"]) {
        if (!part.is_array())
            throw ParseError("partition: parts must be arrays of vertex ids");
        std::vector<int> vertices;
        for (const auto& v : part) {
            if (!v.is_number_integer())
                throw ParseError("partition: vertex ids must be integers");
            vertices.push_back(v.get<int>());
        }
        p.parts.push_back(std::move(vertices));
    }
    if (static_cast<int>(p.parts.size()) != p.k)
        throw ParseError("partition: expected " + std::to_string(p.k) + " parts, got " +
                         std::to_string(p.parts.size()));
    return p;
}

void write_trace_jsonl(const SolveTrace& trace, std::ostream& out) {
    for (const TraceStep& s : trace.steps) {
        json j;
        j["step"] = s.step;
        j["vertex"] = s.vertex;
        j["from"] = s.from_color;
        j["to"] = s.to_color;
        j["sigma_before"] = s.sigma_before.str();
        j["sigma_after"] = s.sigma_after.str();
        j["mix_before"] = s.mix_before;
        j["mix_after"] = s.mix_after;
        out << j.dump() << '\n';
    }
}

std::string trace_jsonl_string(const SolveTrace& trace) {
    std::ostringstream out;
    write_trace_jsonl(trace, out);
    return out.str();
}

} // namespace kcolor
