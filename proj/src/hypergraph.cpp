#include "sgt/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace sgt {

Hypergraph::Hypergraph(int n_, std::vector<Coalition> edges_) : n(n_) {
    edges.reserve(edges_.size());
    std::unordered_set<std::uint64_t> seen;
    for (const Coalition& x : edges_) {
        if (x.n != n) throw DimensionMismatch("edge ground size differs from hypergraph");
        if (seen.insert(x.bits).second) edges.push_back(x);
    }
}

Hypergraph Hypergraph::from_masks(int n, const std::vector<std::uint64_t>& masks) {
    std::vector<Coalition> es;
    es.reserve(masks.size());
    for (std::uint64_t m : masks) es.emplace_back(m, n);
    return Hypergraph(n, std::move(es));
}

bool Hypergraph::contains_edge(const Coalition& x) const {
    for (const Coalition& e : edges)
        if (e.bits == x.bits) return true;
    return false;
}

bool Hypergraph::same_edge_set(const Hypergraph& other) const {
    if (n != other.n || edges.size() != other.edges.size()) return false;
    std::vector<std::uint64_t> a, b;
    a.reserve(edges.size());
    b.reserve(edges.size());
    for (const Coalition& x : edges) a.push_back(x.bits);
    for (const Coalition& x : other.edges) b.push_back(x.bits);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Hypergraph Hypergraph::sorted() const {
    Hypergraph h = *this;
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

bool Hypergraph::is_antichain() const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && edges[i].strict_subset_of(edges[j])) return false;
    return true;
}

Hypergraph complement_family(const Hypergraph& h) {
    std::vector<Coalition> out;
    out.reserve(h.edges.size());
    for (const Coalition& x : h.edges) out.push_back(x.complement());
    return Hypergraph(h.n, std::move(out));
}

Hypergraph minimize(const Hypergraph& h) {
    std::vector<Coalition> out;
    out.reserve(h.edges.size());
    for (const Coalition& x : h.edges) {
        bool redundant = false;
        for (const Coalition& z : h.edges)
            if (z.strict_subset_of(x)) { redundant = true; break; }
        if (!redundant) out.push_back(x);
    }
    return Hypergraph(h.n, std::move(out));
}

bool responds(const Hypergraph& h, const Coalition& z) {
    if (z.n != h.n) throw DimensionMismatch("responds: ground size mismatch");
    for (const Coalition& x : h.edges)
        if (x.subset_of(z)) return true;
    return false;
}

bool transversal(const Hypergraph& h, const Coalition& z) {
    if (z.n != h.n) throw DimensionMismatch("transversal: ground size mismatch");
    for (const Coalition& x : h.edges)
        if (!x.intersects(z)) return false;
    return true;
}

SimpleGame::SimpleGame(Hypergraph kernel_) : kernel(std::move(kernel_)) {
    if (!kernel.is_antichain())
        throw NotAntichain("simple game kernel must be an antichain");
}

} // namespace sgt
