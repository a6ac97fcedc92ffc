#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "blocksing/blocks.hpp"
#include "blocksing/reduction.hpp"

namespace blocksing {

/// {"step", "block", "cut_vertex", "case", "S", "gamma", "new_weight"} in that
/// order; rationals as "p/q" strings, absent values as null.
nlohmann::ordered_json to_json(const TraceStep& step);

/// to_json(step) on a single line, no trailing newline.
std::string to_json_line(const TraceStep& step);

/// {"BV": [[...]], "CV": [[...]], "f": {"p": count, ...}} with f keyed by
/// vertex in ascending order (cut vertices only).
nlohmann::ordered_json to_json(const BlockCutStructure& structure);

}  // namespace blocksing
