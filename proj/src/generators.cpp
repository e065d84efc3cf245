#include "sgt/generators.hpp"

#include "sgt/oracle.hpp"
#include "sgt/regular.hpp"

namespace sgt {

Hypergraph random_antichain(Rng& rng, int n, int max_seed_edges) {
    if (max_seed_edges <= 0) max_seed_edges = 2 * n + 2;
    std::uniform_int_distribution<int> count(0, max_seed_edges);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> seeds;
    const int k = count(rng);
    seeds.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) seeds.push_back(mask(rng));
    return minimize(Hypergraph::from_masks(n, seeds));
}

Hypergraph random_regular_kernel(Rng& rng, int n) {
    require_oracle_size(n, kDefaultOracleLimit);
    std::uniform_int_distribution<int> count(1, n + 2);
    std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> seeds;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) seeds.push_back(mask(rng));
    const Hypergraph seeded = Hypergraph::from_masks(n, seeds);
    const auto win = lattice::shift_closure(seeded);
    return lattice::minimal_members(win, n);
}

RandomWeightedGame random_weighted_game(Rng& rng, int n, int max_weight) {
    std::uniform_int_distribution<int> weight(0, max_weight);
    std::vector<long long> w(static_cast<std::size_t>(n));
    long long total = 0;
    for (auto& v : w) {
        v = weight(rng);
        total += v;
    }
    std::uniform_int_distribution<long long> quota_dist(1, std::max<long long>(1, total));
    const long long quota = quota_dist(rng);

    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<std::uint8_t> win(size, 0);
    for (std::uint64_t m = 0; m < size; ++m) {
        long long s = 0;
        for (int a = 0; a < n; ++a)
            if (m >> a & 1) s += w[static_cast<std::size_t>(a)];
        win[m] = s >= quota;
    }
    RandomWeightedGame out{lattice::minimal_members(win, n), {}};
    out.criterion.quota = quota;
    out.criterion.weights.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) out.criterion.weights[static_cast<std::size_t>(a)] = w[static_cast<std::size_t>(a)];
    return out;
}

} // namespace sgt
