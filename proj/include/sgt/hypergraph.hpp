#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgt/coalition.hpp"
#include "sgt/errors.hpp"

namespace sgt {

// A finite family of coalitions over a common ground set 1..n. Duplicate edges
// are dropped on construction; the order of the surviving edges is preserved
// for I/O fidelity only, equality is as a set.
struct Hypergraph {
    int n = 0;
    std::vector<Coalition> edges;

    Hypergraph() = default;
    explicit Hypergraph(int n_) : n(n_) {}
    Hypergraph(int n_, std::vector<Coalition> edges_);

    static Hypergraph from_masks(int n, const std::vector<std::uint64_t>& masks);

    std::size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }
    bool contains_edge(const Coalition& x) const;

    // |A| * |H|, the bit count of the incidence matrix.
    std::size_t bit_size() const { return static_cast<std::size_t>(n) * edges.size(); }

    bool same_edge_set(const Hypergraph& other) const;
    Hypergraph sorted() const; // edges in ascending mask order

    bool is_antichain() const;
};

// {A\X : X in H}, duplicates removed, input order otherwise preserved.
Hypergraph complement_family(const Hypergraph& h);

// Edges of H that do not strictly contain another edge of H; an antichain.
Hypergraph minimize(const Hypergraph& h);

// True iff some edge of H is contained in Z (Z is winning when H is a kernel).
bool responds(const Hypergraph& h, const Coalition& z);

// True iff Z meets every edge of H.
bool transversal(const Hypergraph& h, const Coalition& z);

// A simple game specified by its family of minimal winning coalitions.
struct SimpleGame {
    Hypergraph kernel;

    explicit SimpleGame(Hypergraph kernel_);
};

struct GameStats {
    std::size_t simple_measure = 0;                 // |A| * |mu(W)|
    std::optional<std::size_t> regular_measure;     // |A| * |mu'(W)| when regular
};

} // namespace sgt
