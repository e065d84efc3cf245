#include "sgt/reduction.hpp"

#include "sgt/regular.hpp"

namespace sgt {

Coalition embed_T(const Coalition& x, int n) {
    if (x.n != n) throw DimensionMismatch("embed_T: ground size mismatch");
    if (2 * n > kMaxGroundSize) throw GroundSetTooLarge("embedding would exceed the mask width");
    Coalition out = Coalition::empty(2 * n);
    for (int a = 1; a <= n; ++a)
        out = x.contains(a) ? out.with(2 * a) : out.with(2 * a - 1);
    return out;
}

Hypergraph embed_image(const Hypergraph& h) {
    std::vector<Coalition> out;
    out.reserve(h.edges.size());
    for (const Coalition& x : h.edges) out.push_back(embed_T(x, h.n));
    return Hypergraph(2 * h.n, std::move(out));
}

bool in_T_image(const Coalition& z) {
    if (z.n % 2) return false;
    for (int a = 1; a <= z.n / 2; ++a)
        if (z.contains(2 * a) == z.contains(2 * a - 1)) return false;
    return true;
}

Hypergraph gadget(int n) {
    if (n < 1) throw Error("gadget requires at least one player");
    if (2 * n > kMaxGroundSize) throw GroundSetTooLarge("gadget would exceed the mask width");
    std::vector<Coalition> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int a = n; a >= 1; --a) {
        Coalition z = Coalition::single(2 * a, 2 * n);
        for (int b = a; b <= n; ++b) z = z.with(2 * b - 1);
        out.push_back(z);
    }
    return Hypergraph(2 * n, std::move(out));
}

namespace {

Hypergraph append(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Coalition> edges = a.edges;
    edges.insert(edges.end(), b.edges.begin(), b.edges.end());
    return Hypergraph(a.n, std::move(edges));
}

} // namespace

EmbeddedPair reduce_pair(const Hypergraph& h, const Hypergraph& k) {
    if (h.n != k.n) throw DimensionMismatch("reduce_pair: ground size mismatch");
    const Hypergraph g = gadget(h.n);
    return EmbeddedPair{h.n, append(embed_image(h), g), append(embed_image(k), g)};
}

Hypergraph reduce_game(const SimpleGame& g, bool shift_minimize_output) {
    const Hypergraph out = append(embed_image(g.kernel), gadget(g.kernel.n));
    if (!shift_minimize_output) return out;
    std::vector<Coalition> kept;
    for (const Coalition& x : out.edges) {
        bool minimal = true;
        for (const Coalition& z : out.edges)
            if (shift_lt(z, x)) { minimal = false; break; }
        if (minimal) kept.push_back(x);
    }
    return Hypergraph(out.n, std::move(kept));
}

} // namespace sgt
