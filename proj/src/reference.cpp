#include "sgt/reference.hpp"

#include <algorithm>

#include "sgt/regular.hpp"

namespace sgt::reference {

std::vector<std::uint8_t> up_closure(const Hypergraph& h) {
    const std::uint64_t total = std::uint64_t{1} << h.n;
    std::vector<std::uint8_t> win(total);
    for (std::uint64_t m = 0; m < total; ++m)
        win[m] = responds(h, Coalition(m, h.n));
    return win;
}

std::vector<std::uint8_t> shift_closure(const Hypergraph& h) {
    const std::uint64_t total = std::uint64_t{1} << h.n;
    std::vector<std::uint8_t> win(total, 0);
    for (std::uint64_t m = 0; m < total; ++m) {
        const Coalition z(m, h.n);
        for (const Coalition& x : h.edges)
            if (shift_leq(x, z)) { win[m] = 1; break; }
    }
    return win;
}

Hypergraph brute_transversal_kernel(const Hypergraph& h) {
    const std::uint64_t total = std::uint64_t{1} << h.n;
    std::vector<Coalition> trans;
    for (std::uint64_t m = 0; m < total; ++m) {
        const Coalition z(m, h.n);
        if (transversal(h, z)) trans.push_back(z);
    }
    // pairwise minimization, comparing only against smaller sets
    std::stable_sort(trans.begin(), trans.end(),
                     [](const Coalition& a, const Coalition& b) { return a.size() < b.size(); });
    std::vector<Coalition> out;
    for (const Coalition& z : trans) {
        bool minimal = true;
        for (const Coalition& w : out)
            if (w.strict_subset_of(z)) { minimal = false; break; }
        if (minimal) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return Hypergraph(h.n, std::move(out));
}

OracleProperties oracle_properties(const Hypergraph& h) {
    const std::uint64_t total = std::uint64_t{1} << h.n;
    OracleProperties p{true, true, true};
    for (std::uint64_t m = 0; m < total; ++m) {
        const Coalition s(m, h.n);
        const bool w = responds(h, s);
        const bool wc = responds(h, s.complement());
        if (w && wc) p.proper = false;
        if (!w && !wc) p.strong = false;
    }
    p.decisive = p.proper && p.strong;
    return p;
}

} // namespace sgt::reference
