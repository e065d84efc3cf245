#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace sgt {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class Rel { LessEq, Eq, GreaterEq };

struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rel rel = Rel::GreaterEq;
    Rational rhs = 0;
};

// Exact rational feasibility of a finite system of linear constraints.
// Variables are free unless flagged nonnegative. A returned point satisfies
// every constraint exactly; it is checked by substitution before returning.
std::optional<std::vector<Rational>> linear_feasibility(
    int nvars, const std::vector<LinearConstraint>& constraints,
    const std::vector<bool>& nonnegative = {});

bool satisfies(const std::vector<Rational>& point, const LinearConstraint& c);

} // namespace sgt
