#include "sgt/gamefile.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace sgt {

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Hypergraph parse_game(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Coalition> edges;
    std::unordered_set<std::uint64_t> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (n < 0) {
            try {
                std::size_t pos = 0;
                n = std::stoi(s, &pos);
                if (pos != s.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "expected the ground-set size, got '" + s + "'");
            }
            if (n < 0 || n > kMaxGroundSize)
                throw ParseError(lineno, "ground-set size out of range 0.." + std::to_string(kMaxGroundSize));
            continue;
        }
        if (static_cast<int>(s.size()) != n)
            throw ParseError(lineno, "row has " + std::to_string(s.size()) + " characters, expected " +
                                         std::to_string(n));
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i) {
            const char ch = s[static_cast<std::size_t>(i)];
            if (ch != '0' && ch != '1')
                throw ParseError(lineno, std::string("invalid character '") + ch + "' in row");
            if (ch == '1') bits |= std::uint64_t{1} << (n - 1 - i);
        }
        if (!seen.insert(bits).second) throw ParseError(lineno, "duplicate row '" + s + "'");
        edges.emplace_back(bits, n);
    }
    if (n < 0) throw ParseError(lineno, "missing ground-set size header");
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_game_string(const std::string& text) {
    std::istringstream in(text);
    return parse_game(in);
}

Hypergraph load_game(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_game(in);
}

void serialize_game(std::ostream& out, const Hypergraph& h) {
    out << h.n << '\n';
    for (const Coalition& x : h.edges) out << x.to_string() << '\n';
}

std::string serialize_game_string(const Hypergraph& h) {
    std::ostringstream out;
    serialize_game(out, h);
    return out.str();
}

} // namespace sgt
