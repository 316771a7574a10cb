#pragma once

#include <cstdint>
#include <vector>

#include "sumsetlab/point_set.hpp"

namespace sumsetlab {

/// Minimum number of parallel hyperplanes with a common primitive normal
/// covering a point set, certified within a bounded normal family. The claim
/// always carries the bound it was computed under.
struct CoverCertificate {
    std::vector<std::int64_t> normal;   // primitive, first nonzero positive
    std::vector<std::int64_t> levels;   // sorted distinct <normal, x>
    std::uint64_t count = 0;            // |levels|
    std::int64_t normal_bound = 0;
};

/// Minimizes the level count over primitive normals with coordinates in
/// [-normal_bound, normal_bound]; ties broken by the lexicographically least
/// normal. normal_bound <= 0 selects the default 2 * coordinate diameter
/// (at least 1).
CoverCertificate cover_number(const PointSet& b, std::int64_t normal_bound = 0, unsigned threads = 0);

/// Certificate soundness: every point lies on one of the certified levels.
bool certificate_covers(const CoverCertificate& cert, const PointSet& b);

/// cover_number(ell * b) with the same bound; asserts the scaled count is at
/// least ell * (count(b) - 1) + 1, which holds for every common normal.
std::uint64_t scaled_cover_lower_bound(const PointSet& b, std::uint64_t ell, std::int64_t normal_bound = 0,
                                       const Caps& caps = default_caps());

/// Discrete simplex {x in [0,n]^k : sum x_i <= n}; size C(n+k, k).
PointSet simplex(int k, std::int64_t n, const Caps& caps = default_caps());

/// Discrete cone over the (k-1)-simplex: {x : x_k in [0,n], x_i >= 0,
/// sum_{i<k} x_i <= x_k}; same size as the simplex.
PointSet cone(int k, std::int64_t n, const Caps& caps = default_caps());

/// `count` points in Z^k with no k+1 on a common hyperplane, verified by
/// exact rank tests; deterministic given the seed.
PointSet general_position_points(int k, std::size_t count, std::uint64_t seed);

/// Exact test that no k+1 points of a lie on a common affine hyperplane.
bool in_general_position(const PointSet& a);

}  // namespace sumsetlab
