#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumsetlab/numeric.hpp"
#include "sumsetlab/point_set.hpp"

namespace sumsetlab {

/// A k-dimensional generalised arithmetic progression: the image in Z of the
/// lattice points of the box prod [0, sides_i] under x -> offset + sum
/// coeffs_i * x_i. The box is always stored anchored at 0; symmetric forms
/// are produced by re-centering the offset.
struct Gap {
    int ambient_dim = 0;                 // k; 0 means a single point
    std::vector<std::int64_t> sides;     // k non-negative side lengths
    std::vector<std::int64_t> coeffs;    // k integer coefficients
    std::int64_t offset = 0;

    Int box_point_count() const;  // prod (sides_i + 1)

    /// Single-line record "gap k=2 sides=4,4 coeffs=1,5 offset=0".
    std::string record() const;
    static Gap parse_record(const std::string& line);
};

/// Exact image of the gap as a canonical 1-D point set.
PointSet enumerate(const Gap& g, const Caps& caps = default_caps());

/// Image of the ell-fold sumset of the gap (box scaled by ell, offset times
/// ell); coincides with iterated_sumset(enumerate(g), ell).
PointSet iterated_image(const Gap& g, std::uint64_t ell, const Caps& caps = default_caps());

/// t-properness: the defining map is injective on the integer points of the
/// t-scaled box anchored at the same corner, i.e. sides floor(sides_i * t).
bool is_t_proper(const Gap& g, const Rational& t, const Caps& caps = default_caps());

/// Every side at least n.
bool is_n_full(const Gap& g, std::int64_t n);

/// Box rescaling: sides_i -> floor(sides_i * num / den). Coefficients and
/// offset are unchanged; this scales the box, not the image set.
Gap scale(const Gap& g, std::int64_t num, std::int64_t den);

/// x is image(g)-separated: no difference of distinct elements of x lies in
/// the symmetrized image (image union -image).
bool is_separated(const PointSet& x, const Gap& g, const Caps& caps = default_caps());

enum class HullMode { exact, heuristic };
enum class HullStatus { exact_optimal, certified_upper_bound };

/// A certified additive hull: b is contained in x_set + image(gap), the gap
/// is 1-proper and |x_set| <= n. total_size = |X + P|.
struct GapHullResult {
    PointSet x_set;
    Gap gap;
    std::uint64_t total_size = 0;
    HullStatus status = HullStatus::certified_upper_bound;
};

struct HullConfig {
    std::uint64_t exact_max_points = 12;
    std::int64_t exact_max_diameter = 200;
};

/// Smallest (exact mode) or certified (heuristic mode) set of the form X + P
/// containing b, where |X| <= n and P is a 1-proper k-GAP. Validity of the
/// returned cover is machine-checked before returning.
///
/// Exact mode searches the full bounded-parameter family: coefficients in
/// [1, diam(b)], box sizes with |P| <= diam(b) + 1, X drawn from b - P.
/// This is exponential by design; the caps above keep it at desk scale.
GapHullResult gap_hull(const PointSet& b, std::uint64_t n, int k, HullMode mode,
                       const HullConfig& config = HullConfig{}, const Caps& caps = default_caps());

}  // namespace sumsetlab
