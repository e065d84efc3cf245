#include "sgt/regular.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace sgt {

bool shift_leq(const Coalition& x, const Coalition& z) {
    if (x.n != z.n) throw DimensionMismatch("shift_leq: ground size mismatch");
    int cx = 0, cz = 0;
    for (int a = x.n; a >= 1; --a) {
        cx += x.contains(a);
        cz += z.contains(a);
        if (cx > cz) return false;
    }
    return true;
}

bool shift_lt(const Coalition& x, const Coalition& z) {
    return x.bits != z.bits && shift_leq(x, z);
}

RegularKernel::RegularKernel(Hypergraph h) : n(h.n), edges(std::move(h.edges)) {
    for (const Coalition& x : edges)
        for (const Coalition& z : edges)
            if (shift_lt(z, x))
                throw NotAntichain("shift-kernel must be a shift-order antichain");
}

PlayerOrdering PlayerOrdering::identity(int n) {
    PlayerOrdering o;
    o.rank.resize(static_cast<std::size_t>(n));
    std::iota(o.rank.begin(), o.rank.end(), 1);
    return o;
}

bool PlayerOrdering::is_identity() const {
    for (std::size_t i = 0; i < rank.size(); ++i)
        if (rank[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Coalition PlayerOrdering::relabel(const Coalition& x) const {
    Coalition out = Coalition::empty(x.n);
    for (int a = 1; a <= x.n; ++a)
        if (x.contains(a)) out = out.with(rank[static_cast<std::size_t>(a - 1)]);
    return out;
}

Hypergraph PlayerOrdering::relabel(const Hypergraph& h) const {
    std::vector<Coalition> out;
    out.reserve(h.edges.size());
    for (const Coalition& x : h.edges) out.push_back(relabel(x));
    return Hypergraph(h.n, std::move(out));
}

Coalition PlayerOrdering::restore(const Coalition& x) const {
    Coalition out = Coalition::empty(x.n);
    for (int a = 1; a <= x.n; ++a)
        if (x.contains(rank[static_cast<std::size_t>(a - 1)])) out = out.with(a);
    return out;
}

RegularityResult is_regular(const Hypergraph& h, bool all_pairs) {
    if (!h.is_antichain()) throw NotAntichain("is_regular expects a kernel (antichain)");
    for (const Coalition& x : h.edges) {
        if (all_pairs) {
            for (int a = 1; a <= h.n; ++a) {
                if (x.contains(a)) continue;
                for (int b = 1; b < a; ++b) {
                    if (!x.contains(b)) continue;
                    if (!responds(h, x.without(b).with(a)))
                        return RegularityResult{false, ShiftViolation{x, a, b}};
                }
            }
        } else {
            // adjacent swaps generate every increasing shift through nu(H)
            for (int b = 1; b < h.n; ++b) {
                if (!x.contains(b) || x.contains(b + 1)) continue;
                if (!responds(h, x.without(b).with(b + 1)))
                    return RegularityResult{false, ShiftViolation{x, b + 1, b}};
            }
        }
    }
    return RegularityResult{true, std::nullopt};
}

namespace {

// Deterministic topological order of the forced strength constraints:
// stronger[u][v] means u must outrank v. Among unconstrained candidates the
// larger original label gets the higher rank, so no constraints yields the
// identity. Returns false on a cycle.
bool rebuild_order(const std::vector<std::vector<bool>>& stronger, PlayerOrdering& order) {
    const int n = static_cast<int>(stronger.size());
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (stronger[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                ++indeg[static_cast<std::size_t>(v)];
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    order.rank.assign(static_cast<std::size_t>(n), 0);
    for (int r = n; r >= 1; --r) {
        int pick = -1;
        for (int u = n - 1; u >= 0; --u)
            if (!placed[static_cast<std::size_t>(u)] && indeg[static_cast<std::size_t>(u)] == 0) {
                pick = u;
                break;
            }
        if (pick < 0) return false;
        placed[static_cast<std::size_t>(pick)] = true;
        order.rank[static_cast<std::size_t>(pick)] = r;
        for (int v = 0; v < n; ++v)
            if (stronger[static_cast<std::size_t>(pick)][static_cast<std::size_t>(v)])
                --indeg[static_cast<std::size_t>(v)];
    }
    return true;
}

} // namespace

std::optional<PlayerOrdering> find_regular_order(const Hypergraph& h) {
    if (!h.is_antichain()) throw NotAntichain("find_regular_order expects a kernel");
    const int n = h.n;
    // Whether the shifted coalition loses does not depend on the candidate
    // order, so every definitive reversal can be collected in one scan: edges
    // in input order, then (a, b) lexicographic. At most n(n-1)/2 pairs get
    // reversed; a pair forced both ways or a cycle means the game is not
    // linear.
    std::vector<std::vector<bool>> stronger(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
    for (const Coalition& x : h.edges) {
        for (int a = 1; a <= n; ++a) {
            if (x.contains(a)) continue;
            for (int b = 1; b <= n; ++b) {
                if (!x.contains(b) || a == b) continue;
                if (stronger[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)])
                    continue; // already reversed
                if (!responds(h, x.without(b).with(a))) {
                    if (stronger[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)])
                        return std::nullopt; // forced both ways
                    stronger[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = true;
                }
            }
        }
    }
    PlayerOrdering order;
    if (!rebuild_order(stronger, order)) return std::nullopt;
    assert(is_regular(order.relabel(h)).regular);
    return order;
}

RegularKernel shift_minimize(const Hypergraph& h) {
    const RegularityResult r = is_regular(h);
    if (!r.regular) throw NotRegular("shift_minimize expects a regular kernel");
    std::vector<Coalition> out;
    for (const Coalition& x : h.edges) {
        bool minimal = true;
        for (const Coalition& z : h.edges)
            if (shift_lt(z, x)) { minimal = false; break; }
        if (minimal) out.push_back(x);
    }
    return RegularKernel(Hypergraph(h.n, std::move(out)));
}

bool shift_responds(const RegularKernel& hp, const Coalition& z) {
    if (z.n != hp.n) throw DimensionMismatch("shift_responds: ground size mismatch");
    for (const Coalition& x : hp.edges)
        if (shift_leq(x, z)) return true;
    return false;
}

namespace {

bool mask_responds(const std::vector<std::uint64_t>& kernel, std::uint64_t z) {
    for (std::uint64_t e : kernel)
        if ((e & ~z) == 0) return true;
    return false;
}

std::vector<std::uint64_t> minimize_masks(std::vector<std::uint64_t> fam) {
    std::sort(fam.begin(), fam.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : fam) {
        bool minimal = true;
        for (std::uint64_t w : out)
            if ((w & ~m) == 0 && w != m) { minimal = false; break; }
        if (minimal) out.push_back(m);
    }
    return out;
}

// All maximal losing coalitions of the game with the given minimized kernel
// over ground players 1..g. Splits on the strongest player missing from the
// loser: above it everything is in, below it the problem recurses.
void max_losers(const std::vector<std::uint64_t>& kernel, int g, std::uint64_t segment_base,
                std::vector<std::uint64_t>& out) {
    if (kernel.empty()) {
        out.push_back(segment_base | (g == 0 ? 0 : ((std::uint64_t{1} << g) - 1)));
        return;
    }
    if (kernel.front() == 0 || mask_responds(kernel, 0)) return; // everything wins
    for (int a = g; a >= 1; --a) {
        const std::uint64_t seg = ((std::uint64_t{1} << g) - 1) ^ ((std::uint64_t{1} << a) - 1);
        if (mask_responds(kernel, seg)) break; // larger segments only get stronger
        const std::uint64_t low = (std::uint64_t{1} << (a - 1)) - 1;
        std::vector<std::uint64_t> ka;
        for (std::uint64_t e : kernel)
            if (!(e >> (a - 1) & 1)) ka.push_back(e & low);
        ka = minimize_masks(std::move(ka));
        if (!ka.empty() && ka.front() == 0) continue; // no losers below this gap
        std::vector<std::uint64_t> subs;
        max_losers(ka, a - 1, 0, subs);
        const std::uint64_t abit = std::uint64_t{1} << (a - 1);
        for (std::uint64_t v : subs) {
            const std::uint64_t y = seg | v;
            if (mask_responds(kernel, y | abit)) out.push_back(segment_base | y);
        }
    }
}

} // namespace

Hypergraph regular_transversal_kernel(const Hypergraph& h) {
    const RegularityResult r = is_regular(h);
    if (!r.regular) throw NotRegular("regular_transversal_kernel expects a regular kernel");
    std::vector<std::uint64_t> kernel;
    kernel.reserve(h.edges.size());
    for (const Coalition& x : h.edges) kernel.push_back(x.bits);
    kernel = minimize_masks(std::move(kernel));
    std::vector<std::uint64_t> losers;
    max_losers(kernel, h.n, 0, losers);
    const std::uint64_t full = Coalition::full(h.n).bits;
    std::vector<std::uint64_t> lambda;
    lambda.reserve(losers.size());
    for (std::uint64_t y : losers) lambda.push_back(full ^ y);
    std::sort(lambda.begin(), lambda.end());
    return Hypergraph::from_masks(h.n, lambda);
}

Hypergraph shift_transversal_kernel_oracle(const RegularKernel& hp, int oracle_limit) {
    return shift_transversal_kernel_oracle(hp.as_hypergraph(), oracle_limit);
}

Hypergraph shift_transversal_kernel_oracle(const Hypergraph& hp, int oracle_limit) {
    require_oracle_size(hp.n, oracle_limit);
    const auto win = lattice::shift_closure(hp);
    const auto tr = lattice::transversal_family(win, hp.n);
    return lattice::shift_minimal_members(tr, hp.n);
}

bool regular_is_decisive(const Hypergraph& h) {
    return regular_transversal_kernel(h).same_edge_set(h);
}

bool regular_is_strong(const Hypergraph& h) {
    const Hypergraph lambda = regular_transversal_kernel(h);
    for (const Coalition& z : lambda.edges)
        if (!responds(h, z)) return false;
    return true;
}

} // namespace sgt
