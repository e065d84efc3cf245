#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

namespace sgt {

// Players are labelled 1..n and player a occupies bit a-1, so player n is the
// most significant position. Table rows print player n leftmost.
inline constexpr int kMaxGroundSize = 62;

struct Coalition {
    std::uint64_t bits = 0;
    int n = 0;

    Coalition() = default;
    Coalition(std::uint64_t bits_, int n_) : bits(bits_), n(n_) {
        assert(n >= 0 && n <= kMaxGroundSize);
        assert(n == kMaxGroundSize || (bits >> n) == 0);
    }

    static Coalition empty(int n) { return Coalition(0, n); }
    static Coalition full(int n) {
        return Coalition(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)), n);
    }
    static Coalition single(int player, int n) {
        return Coalition(std::uint64_t{1} << (player - 1), n);
    }

    bool contains(int player) const { return (bits >> (player - 1)) & 1u; }
    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }

    Coalition with(int player) const { return Coalition(bits | (std::uint64_t{1} << (player - 1)), n); }
    Coalition without(int player) const { return Coalition(bits & ~(std::uint64_t{1} << (player - 1)), n); }
    Coalition complement() const { return Coalition(full(n).bits & ~bits, n); }

    bool subset_of(const Coalition& z) const { return (bits & ~z.bits) == 0; }
    bool strict_subset_of(const Coalition& z) const { return subset_of(z) && bits != z.bits; }
    bool intersects(const Coalition& z) const { return (bits & z.bits) != 0; }

    bool operator==(const Coalition& o) const { return bits == o.bits && n == o.n; }
    bool operator!=(const Coalition& o) const { return !(*this == o); }
    bool operator<(const Coalition& o) const { return bits < o.bits; }

    // n characters over {0,1}, leftmost character is player n.
    std::string to_string() const {
        std::string s(static_cast<std::size_t>(n), '0');
        for (int a = 1; a <= n; ++a)
            if (contains(a)) s[static_cast<std::size_t>(n - a)] = '1';
        return s;
    }
};

} // namespace sgt
