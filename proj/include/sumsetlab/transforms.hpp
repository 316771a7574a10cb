#pragma once

#include "sumsetlab/point_set.hpp"
#include "sumsetlab/report.hpp"

namespace sumsetlab {

/// Compression onto the coordinate plane orthogonal to `axis` (1-based): the
/// set is first translated so its bounding box has min corner 0, then every
/// line parallel to e_axis is replaced by the initial segment 0..count-1.
/// Cardinality is preserved; sumset sizes never grow.
PointSet compress(const PointSet& a, int axis);

/// Iterates compress over axes 1..k until fixpoint.
PointSet compress_fully(const PointSet& a);

/// Checks |A+B+{0,1}^d|^(1/d) >= |A|^(1/d) + |B|^(1/d) exactly.
InequalityReport cube_summand_identity_check(const PointSet& a, const PointSet& b,
                                             const Caps& caps = default_caps());

/// Constructive Ruzsa covering: greedy X subset of a (canonical scan order)
/// with pairwise disjoint translates x + b; then a is contained in X + b - b
/// and |X| <= |a+b|/|b|. Both properties are machine-checked on every call.
PointSet ruzsa_cover(const PointSet& a, const PointSet& b, const Caps& caps = default_caps());

}  // namespace sumsetlab
