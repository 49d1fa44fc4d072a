#pragma once

#include "longknot/diagram.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace oracle {

/// Pairing by brute force: walk every subset of arrows, restrict the word,
/// relabel by first occurrence and compare the resulting role word with the
/// pattern's. Unsigned patterns weight each match by the product of signs;
/// signed ones count matches whose signs agree. Independent of the library's
/// matcher. Only for small diagrams (2^n subsets).
std::int64_t naive_pairing(const std::string& pattern_word, const longknot::LongGaussDiagram& d,
                           const std::optional<std::string>& pattern_signs = std::nullopt);

/// Sign of a crossing from line geometry: three oriented straight lines in
/// general position at heights top > middle > bottom. Returns whether the R3
/// triangle with the given strand orders and signs can be drawn.
bool r3_drawable(bool top_meets_x_first, bool middle_meets_x_first, bool bottom_meets_y_first,
                 int x, int y, int z);

}  // namespace oracle
