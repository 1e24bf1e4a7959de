#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tilecheck {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

struct Term {
    std::size_t variable = 0;
    std::int64_t coefficient = 0;
};

// Σ coefficient · variable = 0. Repeated variables add up.
using LinearForm = std::vector<Term>;

struct LinearSystem {
    std::vector<std::string> variables;
    std::vector<LinearForm> equations;

    std::size_t add_variable(std::string name);
    // Dense coefficient row of one equation, duplicates merged.
    std::vector<Integer> row(std::size_t equation) const;
    // Violations of "every coefficient references a declared variable".
    std::vector<std::string> check() const;
};

// Entries indexed like LinearSystem::variables.
using RationalVector = std::vector<Rational>;

struct Feasibility {
    // x ≥ 0 with Ax = 0 and Σx = 1.
    std::optional<RationalVector> solution;
    // y with every component of yᵀA strictly positive, one entry per equation.
    std::optional<RationalVector> certificate;

    bool feasible() const { return solution.has_value(); }
};

// Decides whether Ax = 0 has a nonnegative nonzero solution, by exact phase-one
// simplex on {Ax = 0, Σx = 1, x ≥ 0} with Bland's rule. Both the solution and the
// certificate are checked by exact substitution before returning.
// No variables: infeasible with an empty certificate. No equations: uniform vector.
Feasibility solve_nonneg_nontrivial(const LinearSystem& system);

bool satisfies(const LinearSystem& system, const RationalVector& x);
bool certifies_infeasible(const LinearSystem& system, const RationalVector& y);

// Multiplies by the lcm of the denominators.
std::vector<Integer> integer_scale(const RationalVector& x);

} // namespace tilecheck
