#include "sgt/oracle.hpp"

#include <string>

namespace sgt {

void require_oracle_size(int n, int oracle_limit) {
    if (n > oracle_limit)
        throw GroundSetTooLarge("ground set of size " + std::to_string(n) +
                                " exceeds oracle limit " + std::to_string(oracle_limit));
}

namespace lattice {

std::vector<std::uint8_t> up_closure(const Hypergraph& h) {
    const int n = h.n;
    const std::int64_t total = std::int64_t{1} << n;
    std::vector<std::uint8_t> win(static_cast<std::size_t>(total), 0);
    for (const Coalition& x : h.edges) win[x.bits] = 1;
    for (int b = 0; b < n; ++b) {
        const std::uint64_t bit = std::uint64_t{1} << b;
#pragma omp parallel for schedule(static)
        for (std::int64_t m = 0; m < total; ++m) {
            if (m & static_cast<std::int64_t>(bit))
                win[static_cast<std::size_t>(m)] |= win[static_cast<std::size_t>(m) ^ bit];
        }
    }
    return win;
}

std::vector<std::uint8_t> shift_closure(const Hypergraph& h) {
    const int n = h.n;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint8_t> win(total, 0);
    for (const Coalition& x : h.edges) win[x.bits] = 1;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (!win[m]) continue;
        if (n >= 1 && !(m & 1u)) win[m | 1u] = 1; // adjoin player 1
        for (int j = 0; j + 1 < n; ++j) {
            const std::uint64_t lo = std::uint64_t{1} << j;
            const std::uint64_t hi = lo << 1;
            if ((m & lo) && !(m & hi)) win[(m ^ lo) | hi] = 1;
        }
    }
    return win;
}

std::vector<std::uint8_t> transversal_family(const std::vector<std::uint8_t>& winning, int n) {
    const std::int64_t total = std::int64_t{1} << n;
    const std::uint64_t full = total - 1;
    std::vector<std::uint8_t> tr(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < total; ++m)
        tr[static_cast<std::size_t>(m)] =
            static_cast<std::uint8_t>(!winning[full ^ static_cast<std::uint64_t>(m)]);
    return tr;
}

Hypergraph minimal_members(const std::vector<std::uint8_t>& member, int n) {
    const std::int64_t total = std::int64_t{1} << n;
    std::vector<std::uint8_t> minimal(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < total; ++m) {
        if (!member[static_cast<std::size_t>(m)]) continue;
        bool ok = true;
        for (std::uint64_t rest = static_cast<std::uint64_t>(m); rest; rest &= rest - 1) {
            const std::uint64_t low = rest & (~rest + 1);
            if (member[static_cast<std::size_t>(m) ^ low]) { ok = false; break; }
        }
        minimal[static_cast<std::size_t>(m)] = ok;
    }
    std::vector<Coalition> out;
    for (std::int64_t m = 0; m < total; ++m)
        if (minimal[static_cast<std::size_t>(m)]) out.emplace_back(static_cast<std::uint64_t>(m), n);
    return Hypergraph(n, std::move(out));
}

Hypergraph shift_minimal_members(const std::vector<std::uint8_t>& member, int n) {
    const std::int64_t total = std::int64_t{1} << n;
    std::vector<std::uint8_t> minimal(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < total; ++m) {
        if (!member[static_cast<std::size_t>(m)]) continue;
        bool ok = true;
        if ((m & 1) && member[static_cast<std::size_t>(m) ^ 1u]) ok = false;
        for (int j = 0; ok && j + 1 < n; ++j) {
            const std::uint64_t lo = std::uint64_t{1} << j;
            const std::uint64_t hi = lo << 1;
            if ((m & static_cast<std::int64_t>(hi)) && !(m & static_cast<std::int64_t>(lo)) &&
                member[(static_cast<std::uint64_t>(m) ^ hi) | lo])
                ok = false;
        }
        minimal[static_cast<std::size_t>(m)] = ok;
    }
    std::vector<Coalition> out;
    for (std::int64_t m = 0; m < total; ++m)
        if (minimal[static_cast<std::size_t>(m)]) out.emplace_back(static_cast<std::uint64_t>(m), n);
    return Hypergraph(n, std::move(out));
}

Hypergraph maximal_nonmembers(const std::vector<std::uint8_t>& member, int n) {
    const std::int64_t total = std::int64_t{1} << n;
    const std::uint64_t full = total - 1;
    std::vector<std::uint8_t> maximal(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < total; ++m) {
        if (member[static_cast<std::size_t>(m)]) continue;
        bool ok = true;
        for (std::uint64_t rest = full ^ static_cast<std::uint64_t>(m); rest; rest &= rest - 1) {
            const std::uint64_t low = rest & (~rest + 1);
            if (!member[static_cast<std::size_t>(m) | low]) { ok = false; break; }
        }
        maximal[static_cast<std::size_t>(m)] = ok;
    }
    std::vector<Coalition> out;
    for (std::int64_t m = 0; m < total; ++m)
        if (maximal[static_cast<std::size_t>(m)]) out.emplace_back(static_cast<std::uint64_t>(m), n);
    return Hypergraph(n, std::move(out));
}

} // namespace lattice

Hypergraph brute_transversal_kernel(const Hypergraph& h, int oracle_limit) {
    require_oracle_size(h.n, oracle_limit);
    const auto win = lattice::up_closure(h);
    const auto tr = lattice::transversal_family(win, h.n);
    return lattice::minimal_members(tr, h.n);
}

OracleProperties oracle_properties(const Hypergraph& h, int oracle_limit) {
    require_oracle_size(h.n, oracle_limit);
    const auto win = lattice::up_closure(h);
    const std::int64_t total = std::int64_t{1} << h.n;
    const std::uint64_t full = total - 1;
    bool proper = true;
    bool strong = true;
#pragma omp parallel for schedule(static) reduction(&& : proper, strong)
    for (std::int64_t m = 0; m < total; ++m) {
        const bool w = win[static_cast<std::size_t>(m)];
        const bool wc = win[full ^ static_cast<std::uint64_t>(m)];
        proper = proper && !(w && wc);
        strong = strong && (w || wc);
    }
    return OracleProperties{proper, strong, proper && strong};
}

} // namespace sgt
