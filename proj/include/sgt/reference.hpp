#pragma once

#include <cstdint>
#include <vector>

#include "sgt/hypergraph.hpp"
#include "sgt/oracle.hpp"

// Serial reference implementations of the exhaustive-scan operations. These
// deliberately avoid the lattice sweeps of oracle.cpp: membership is decided
// per subset by direct edge scans, so the two paths share no logic. Kept for
// testing and for the kernel benchmark.
namespace sgt::reference {

std::vector<std::uint8_t> up_closure(const Hypergraph& h);
std::vector<std::uint8_t> shift_closure(const Hypergraph& h);
Hypergraph brute_transversal_kernel(const Hypergraph& h);
OracleProperties oracle_properties(const Hypergraph& h);

} // namespace sgt::reference
