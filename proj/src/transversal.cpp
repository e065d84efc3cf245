#include "sgt/transversal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sgt {

namespace {

// Remove duplicates and non-minimal masks. Sets are bucketed by popcount so
// containment is only tested against strictly smaller sets.
std::vector<std::uint64_t> prune(std::vector<std::uint64_t> fam) {
    std::sort(fam.begin(), fam.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::vector<std::uint64_t> out;
    std::size_t smaller_end = 0; // end of the strictly-smaller popcount prefix in out
    int cur_pop = -1;
    for (std::uint64_t m : fam) {
        const int pop = std::popcount(m);
        if (pop != cur_pop) { smaller_end = out.size(); cur_pop = pop; }
        bool minimal = true;
        for (std::size_t i = 0; i < smaller_end; ++i)
            if ((out[i] & ~m) == 0) { minimal = false; break; }
        if (minimal) out.push_back(m);
    }
    return out;
}

} // namespace

Hypergraph minimal_transversals(const Hypergraph& h) {
    if (h.edges.empty()) return Hypergraph::from_masks(h.n, {0});
    std::vector<std::uint64_t> fam = {0};
    for (const Coalition& x : h.edges) {
        if (x.is_empty()) return Hypergraph(h.n); // no set meets the empty edge
        std::vector<std::uint64_t> next;
        next.reserve(fam.size() * static_cast<std::size_t>(x.size()));
        for (std::uint64_t t : fam) {
            if (t & x.bits) { next.push_back(t); continue; } // already meets x
            for (std::uint64_t rest = x.bits; rest; rest &= rest - 1)
                next.push_back(t | (rest & (~rest + 1)));
        }
        fam = prune(std::move(next));
    }
    std::sort(fam.begin(), fam.end());
    return Hypergraph::from_masks(h.n, fam);
}

} // namespace sgt
