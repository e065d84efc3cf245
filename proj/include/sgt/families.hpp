#pragma once

#include <string>
#include <vector>

#include "sgt/hypergraph.hpp"

namespace sgt {

// Named instance generators: fano, example1, example3, example4, example5,
// gamma, matching-embedded. m parametrizes example3, gamma, matching-embedded.
Hypergraph family(const std::string& name, int m = 0);

std::vector<std::string> family_names();

} // namespace sgt
