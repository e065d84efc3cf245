#include "sgt/families.hpp"

#include <bit>

#include "sgt/gamefile.hpp"
#include "sgt/reduction.hpp"

namespace sgt {

namespace {

const char* kFano = R"(7
0000111
0011010
0101100
0110001
1001001
1010100
1100010
)";

const char* kExample1 = R"(3
011
100
111
)";

const char* kExample4 = R"(9
011011011
011011101
011011110
011100100
011101000
011110000
100011100
100100011
100100101
100100110
100101000
100110000
101000000
110000000
)";

const char* kExample5 = R"(9
011011011
011100100
100011100
100100011
100101000
101000000
)";

// disjoint pairs {2i, 2i-1}, strongest pair first
Hypergraph matching_family(int m) {
    const int n = 2 * m;
    std::vector<Coalition> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = m; i >= 1; --i)
        edges.push_back(Coalition::single(2 * i, n).with(2 * i - 1));
    return Hypergraph(n, std::move(edges));
}

// all m-subsets of 2m players, ascending mask order
Hypergraph gamma_family(int m) {
    const int n = 2 * m;
    std::vector<Coalition> edges;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (std::popcount(mask) == m) edges.emplace_back(mask, n);
    return Hypergraph(n, std::move(edges));
}

void need_m(const std::string& name, int m, int max) {
    if (m < 1 || m > max)
        throw UnknownFamily("family '" + name + "' needs 1 <= m <= " + std::to_string(max));
}

} // namespace

Hypergraph family(const std::string& name, int m) {
    if (name == "fano") return parse_game_string(kFano);
    if (name == "example1") return parse_game_string(kExample1);
    if (name == "example4") return parse_game_string(kExample4);
    if (name == "example5") return parse_game_string(kExample5);
    if (name == "example3") {
        need_m(name, m, kMaxGroundSize / 2);
        return matching_family(m);
    }
    if (name == "gamma") {
        need_m(name, m, 15); // the edge count is C(2m, m)
        return gamma_family(m);
    }
    if (name == "matching-embedded") {
        need_m(name, m, kMaxGroundSize / 4);
        const SimpleGame g(matching_family(m));
        return reduce_game(g);
    }
    throw UnknownFamily("unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
    return {"fano", "example1", "example3", "example4", "example5", "gamma", "matching-embedded"};
}

} // namespace sgt
