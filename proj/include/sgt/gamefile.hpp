#pragma once

#include <iosfwd>
#include <string>

#include "sgt/hypergraph.hpp"

namespace sgt {

// Text format mirroring the incidence tables: '#' comment lines, then the
// ground-set size, then one row of n characters over {0,1} per edge with the
// leftmost character standing for player n. Duplicate rows are rejected.
Hypergraph parse_game(std::istream& in);
Hypergraph parse_game_string(const std::string& text);
Hypergraph load_game(const std::string& path);

void serialize_game(std::ostream& out, const Hypergraph& h);
std::string serialize_game_string(const Hypergraph& h);

} // namespace sgt
