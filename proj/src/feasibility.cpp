#include "sgt/feasibility.hpp"

#include <cassert>

#include "sgt/errors.hpp"

namespace sgt {

bool satisfies(const std::vector<Rational>& point, const LinearConstraint& c) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * point[j];
    switch (c.rel) {
        case Rel::LessEq: return lhs <= c.rhs;
        case Rel::Eq: return lhs == c.rhs;
        case Rel::GreaterEq: return lhs >= c.rhs;
    }
    return false;
}

namespace {

// Feasibility of {M z >= b, z >= 0} decided on the dual cone
// max b.y s.t. M^T y <= 0, y >= 0, whose value is either 0 (feasible primal,
// with the simplex multipliers as the point) or unbounded (infeasible).
// Every pivot is degenerate, so after a bounded Dantzig prefix the entering
// rule switches to Bland, which cannot cycle.
std::optional<std::vector<Rational>> solve_cone(const std::vector<std::vector<Rational>>& m,
                                                const std::vector<Rational>& b, int dim) {
    const std::size_t rows = static_cast<std::size_t>(dim); // dual constraints
    const std::size_t ncols = m.size() + rows;              // y columns + slacks
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(ncols, Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < rows; ++j) t[j][i] = m[i][j];
    for (std::size_t j = 0; j < rows; ++j) t[j][m.size() + j] = 1;
    std::vector<Rational> obj(ncols, Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i) obj[i] = b[i];
    std::vector<std::size_t> basis(rows);
    for (std::size_t j = 0; j < rows; ++j) basis[j] = m.size() + j;

    const long dantzig_budget = 4 * static_cast<long>(ncols);
    long pivots = 0;
    while (true) {
        if (++pivots > 2'000'000) throw Error("feasibility solver exceeded pivot budget");
        std::size_t enter = ncols;
        if (pivots <= dantzig_budget) {
            Rational best = 0;
            for (std::size_t c = 0; c < ncols; ++c)
                if (obj[c] > best) { best = obj[c]; enter = c; }
        } else {
            for (std::size_t c = 0; c < ncols; ++c)
                if (obj[c] > 0) { enter = c; break; }
        }
        if (enter == ncols) break; // optimal, value 0

        std::size_t leave = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (t[r][enter] > 0 && (leave == rows || basis[r] < basis[leave])) leave = r;
        if (leave == rows) return std::nullopt; // improving ray: primal infeasible

        const Rational piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            const Rational f = t[r][enter];
            for (std::size_t c = 0; c < ncols; ++c) t[r][c] -= f * t[leave][c];
        }
        if (obj[enter] != 0) {
            const Rational f = obj[enter];
            for (std::size_t c = 0; c < ncols; ++c) obj[c] -= f * t[leave][c];
        }
        basis[leave] = enter;
    }
    // multipliers of the dual rows are a primal point
    std::vector<Rational> z(rows);
    for (std::size_t j = 0; j < rows; ++j) z[j] = -obj[m.size() + j];
    return z;
}

} // namespace

std::optional<std::vector<Rational>> linear_feasibility(
    int nvars, const std::vector<LinearConstraint>& constraints,
    const std::vector<bool>& nonnegative) {
    std::vector<bool> nn = nonnegative;
    if (nn.empty()) nn.assign(static_cast<std::size_t>(nvars), false);
    if (static_cast<int>(nn.size()) != nvars)
        throw DimensionMismatch("nonnegativity flags do not match variable count");

    // column layout of the normalized system: one column per variable plus one
    // negated column per free variable
    std::vector<int> neg_col(static_cast<std::size_t>(nvars), -1);
    int dim = nvars;
    for (int j = 0; j < nvars; ++j)
        if (!nn[static_cast<std::size_t>(j)]) neg_col[static_cast<std::size_t>(j)] = dim++;

    std::vector<std::vector<Rational>> m;
    std::vector<Rational> b;
    auto add_row = [&](const LinearConstraint& c, bool negate) {
        std::vector<Rational> row(static_cast<std::size_t>(dim), Rational(0));
        for (int j = 0; j < nvars; ++j) {
            const Rational v = negate ? -c.coeffs[static_cast<std::size_t>(j)]
                                      : c.coeffs[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = v;
            if (neg_col[static_cast<std::size_t>(j)] >= 0)
                row[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])] = -v;
        }
        m.push_back(std::move(row));
        b.push_back(negate ? -c.rhs : c.rhs);
    };
    for (const LinearConstraint& c : constraints) {
        if (static_cast<int>(c.coeffs.size()) != nvars)
            throw DimensionMismatch("constraint width does not match variable count");
        if (c.rel == Rel::GreaterEq || c.rel == Rel::Eq) add_row(c, false);
        if (c.rel == Rel::LessEq || c.rel == Rel::Eq) add_row(c, true);
    }

    const auto z = solve_cone(m, b, dim);
    if (!z) return std::nullopt;

    std::vector<Rational> x(static_cast<std::size_t>(nvars));
    for (int j = 0; j < nvars; ++j) {
        x[static_cast<std::size_t>(j)] = (*z)[static_cast<std::size_t>(j)];
        if (neg_col[static_cast<std::size_t>(j)] >= 0)
            x[static_cast<std::size_t>(j)] -=
                (*z)[static_cast<std::size_t>(neg_col[static_cast<std::size_t>(j)])];
    }
    for (const LinearConstraint& c : constraints)
        if (!satisfies(x, c)) throw Error("feasibility point failed substitution check");
    return x;
}

} // namespace sgt
