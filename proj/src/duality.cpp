#include "sgt/duality.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>

namespace sgt {

CoherenceResult is_coherent(const Hypergraph& h, const Hypergraph& k) {
    if (h.n != k.n) throw DimensionMismatch("is_coherent: ground size mismatch");
    for (const Coalition& x : h.edges)
        for (const Coalition& y : k.edges)
            if (!x.intersects(y))
                return CoherenceResult{false, std::make_pair(x, y)};
    return CoherenceResult{true, std::nullopt};
}

namespace {

struct Family {
    std::vector<std::uint64_t> edges; // deduplicated, minimized masks

    bool has_empty() const { return !edges.empty() && edges.front() == 0; }
    bool responds_to(std::uint64_t z) const {
        for (std::uint64_t x : edges)
            if ((x & ~z) == 0) return true;
        return false;
    }
};

Family make_family(std::vector<std::uint64_t> masks) {
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : masks) {
        bool minimal = true;
        for (std::uint64_t w : out)
            if ((w & ~m) == 0 && w != m) { minimal = false; break; }
        if (minimal) out.push_back(m);
    }
    return Family{std::move(out)};
}

std::uint64_t support(const Family& f) {
    std::uint64_t s = 0;
    for (std::uint64_t x : f.edges) s |= x;
    return s;
}

struct SearchResult {
    bool complete = true;
    std::uint64_t witness = 0;
};

// Exhaustive witness search over the submasks of act.
SearchResult scan(const Family& h, const Family& k, std::uint64_t act) {
    std::uint64_t sub = act;
    while (true) {
        if (!h.responds_to(sub) && !k.responds_to(act & ~sub))
            return SearchResult{false, sub};
        if (sub == 0) break;
        sub = (sub - 1) & act;
    }
    return SearchResult{};
}

// Completeness of (H, K) relative to the active player set: does every
// Z subseteq act respond to H or leave act\Z responding to K?
SearchResult complete_rec(const Family& h, const Family& k, std::uint64_t act) {
    if (h.has_empty() || k.has_empty()) return SearchResult{};
    // players outside both supports never matter; keep them out of Z
    act &= support(h) | support(k);
    if (h.edges.empty()) return SearchResult{false, act};
    if (k.edges.empty()) return SearchResult{false, 0};

    const int players = std::popcount(act);
    const std::size_t hk = h.edges.size() * k.edges.size();
    if (players <= 8 || (hk <= 16 && players <= 20)) return scan(h, k, act);

    // branch on the player occurring most frequently across both families,
    // lowest bit index on ties
    int best_bit = -1, best_count = -1;
    for (std::uint64_t rest = act; rest; rest &= rest - 1) {
        const int bit = std::countr_zero(rest);
        const std::uint64_t m = std::uint64_t{1} << bit;
        int count = 0;
        for (std::uint64_t x : h.edges) count += (x & m) != 0;
        for (std::uint64_t y : k.edges) count += (y & m) != 0;
        if (count > best_count) { best_count = count; best_bit = bit; }
    }
    const std::uint64_t xb = std::uint64_t{1} << best_bit;
    const std::uint64_t rest = act & ~xb;

    std::vector<std::uint64_t> h0, h01, k0, k01;
    for (std::uint64_t e : h.edges) {
        if (!(e & xb)) h0.push_back(e);
        h01.push_back(e & ~xb);
    }
    for (std::uint64_t e : k.edges) {
        if (!(e & xb)) k0.push_back(e);
        k01.push_back(e & ~xb);
    }

    // witness without the branching player
    SearchResult r = complete_rec(Family{h0}, make_family(std::move(k01)), rest);
    if (!r.complete) return r;
    // witness containing it
    r = complete_rec(make_family(std::move(h01)), Family{k0}, rest);
    if (!r.complete) return SearchResult{false, r.witness | xb};
    return SearchResult{};
}

} // namespace

CompletenessResult is_complete(const Hypergraph& h, const Hypergraph& k) {
    if (h.n != k.n) throw DimensionMismatch("is_complete: ground size mismatch");
    std::vector<std::uint64_t> hm, km;
    for (const Coalition& x : h.edges) hm.push_back(x.bits);
    for (const Coalition& y : k.edges) km.push_back(y.bits);
    const std::uint64_t act = Coalition::full(h.n).bits;
    const SearchResult r = complete_rec(make_family(std::move(hm)), make_family(std::move(km)), act);
    if (r.complete) return CompletenessResult{true, std::nullopt};
    const Coalition z(r.witness, h.n);
    assert(!responds(h, z) && !responds(k, z.complement()));
    return CompletenessResult{false, z};
}

DualityVerdict is_dual_pair(const Hypergraph& h, const Hypergraph& k) {
    DualityVerdict v;
    const CoherenceResult c = is_coherent(h, k);
    v.coherent = c.coherent;
    if (!c.coherent) {
        v.complete = is_complete(h, k).complete;
        v.witness = c.witness->first;
        return v;
    }
    const CompletenessResult comp = is_complete(h, k);
    v.complete = comp.complete;
    if (!comp.complete) v.witness = comp.witness;
    return v;
}

bool game_is_proper(const SimpleGame& g) {
    return is_coherent(g.kernel, g.kernel).coherent;
}

CompletenessResult game_is_strong(const SimpleGame& g) {
    return is_complete(g.kernel, g.kernel);
}

bool game_is_decisive(const SimpleGame& g) {
    return game_is_proper(g) && game_is_strong(g).complete;
}

} // namespace sgt
