#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgt/hypergraph.hpp"

namespace testsupport {

inline sgt::Coalition row(int n, const std::string& s) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i)
        if (s[static_cast<std::size_t>(i)] == '1') bits |= std::uint64_t{1} << (n - 1 - i);
    return sgt::Coalition(bits, n);
}

inline sgt::Hypergraph game(int n, const std::vector<std::string>& rows) {
    std::vector<sgt::Coalition> edges;
    edges.reserve(rows.size());
    for (const std::string& s : rows) edges.push_back(row(n, s));
    return sgt::Hypergraph(n, std::move(edges));
}

inline std::vector<std::string> rows_of(const sgt::Hypergraph& h) {
    std::vector<std::string> out;
    out.reserve(h.edges.size());
    for (const sgt::Coalition& x : h.edges) out.push_back(x.to_string());
    return out;
}

// all 2^n subset masks in ascending order that satisfy the predicate
template <typename Pred>
std::vector<std::uint64_t> masks_where(int n, Pred&& p) {
    std::vector<std::uint64_t> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m)
        if (p(sgt::Coalition(m, n))) out.push_back(m);
    return out;
}

} // namespace testsupport
