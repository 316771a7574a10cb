#pragma once

#include <optional>
#include <vector>

#include "sumsetlab/numeric.hpp"

namespace sumsetlab {

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
};

/// One term coeff * radicand^(1/index) of a radical sum. radicand >= 0.
struct RadicalTerm {
    Rational coeff;
    Rational radicand;
    unsigned index = 1;
};

/// Exact sign of sum(coeff_i * radicand_i^(1/index_i)): -1, 0 or +1.
///
/// Zero sums are detected algebraically (radicands are reduced to d-th-power-
/// free cores; distinct cores are linearly independent over Q), so bisection
/// always terminates. No verdict ever comes from floating point.
int sign_of_radical_sum(const std::vector<RadicalTerm>& terms);

/// Encloses the sum in a rational interval of width <= max_width.
RationalInterval bracket_radical_sum(const std::vector<RadicalTerm>& terms, const Rational& max_width);

/// Encloses x^(1/d), x >= 0.
RationalInterval bracket_nth_root(const Rational& x, unsigned d, const Rational& max_width);

/// x^(1/d) when it is rational, otherwise nullopt.
std::optional<Rational> exact_nth_root(const Rational& x, unsigned d);

/// floor(n^(1/d)) for n >= 0.
Int floor_nth_root(const Int& n, unsigned d);

/// Convenience: sign of u^(1/d) - v^(1/d) - q * w^(1/d)  (u, v, w >= 0).
int compare_root_vs_root_sum(const Rational& u, const Rational& v, const Rational& q, const Rational& w,
                             unsigned d);

}  // namespace sumsetlab
