#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/numeric.hpp"

namespace sumsetlab {

/// Size caps shared by the computation kernels. Every cap is settable from
/// the CLI; the defaults here are the documented per-module defaults.
struct Caps {
    std::uint64_t max_points = 50'000'000;       // largest materialized point set
    std::uint64_t max_enumeration = 10'000'000;  // GAP/box lattice enumeration
    std::uint64_t max_pairs = 50'000'000;        // sort-merge pair budget per line
};

const Caps& default_caps();

/// Finite subset of Z^k in canonical form: rows strictly increasing
/// lexicographically, duplicate-free, stored flat (size() * dim() entries).
/// Immutable after construction; all operations below are pure functions.
class PointSet {
public:
    PointSet() : dim_(1) {}
    explicit PointSet(int dim);

    /// Canonicalizes (sorts + dedupes) arbitrary input rows.
    static PointSet of(int dim, const std::vector<std::vector<std::int64_t>>& points);
    static PointSet of_1d(std::vector<std::int64_t> values);
    /// Trusted path for kernels that already produce canonical rows.
    static PointSet from_canonical(int dim, std::vector<std::int64_t> flat);

    int dim() const { return dim_; }
    std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(dim_); }
    bool empty() const { return flat_.empty(); }
    const std::vector<std::int64_t>& flat() const { return flat_; }

    std::span<const std::int64_t> point(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    std::int64_t value1d(std::size_t i) const { return flat_[i]; }
    std::vector<std::int64_t> values1d() const;

    bool contains(std::span<const std::int64_t> p) const;
    bool is_subset_of(const PointSet& other) const;

    /// [min, max] of one coordinate axis (1-based axis index).
    std::pair<std::int64_t, std::int64_t> coord_range(int axis) const;
    /// max over axes of (max - min); 0 for singletons.
    std::int64_t coordinate_diameter() const;

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.dim_ == b.dim_ && a.flat_ == b.flat_;
    }

private:
    int dim_;
    std::vector<std::int64_t> flat_;
};

/// Axis-aligned box: side length n_i means coordinate range [0, n_i].
struct Box {
    int dim = 1;
    std::vector<std::int64_t> sides;

    Int lattice_point_count() const;
    PointSet enumerate(const Caps& caps = default_caps()) const;
};

// --- lattice kernel -------------------------------------------------------

/// Minkowski sum {x+y}. Dense 1-D lines go through a bit-vector convolution
/// when the combined range is at most 2^24; everything else falls back to
/// sort-merge. k >= 2 decomposes into lines along the widest axis.
PointSet sumset(const PointSet& a, const PointSet& b, const Caps& caps = default_caps());

/// |a+b| without materializing the sum (same decomposition as sumset).
std::uint64_t sumset_size(const PointSet& a, const PointSet& b, const Caps& caps = default_caps());

PointSet translate(const PointSet& a, std::span<const std::int64_t> t);
PointSet dilate(const PointSet& a, std::int64_t c);
PointSet minus(const PointSet& a);
PointSet difference_set(const PointSet& a, const PointSet& b, const Caps& caps = default_caps());

/// h-fold sumset a + ... + a via binary decomposition
/// h*A = floor(h/2)*A + ceil(h/2)*A. h = 0 is an error by convention.
PointSet iterated_sumset(const PointSet& a, std::uint64_t h, const Caps& caps = default_caps());

/// Exact Lebesgue volume of the convex hull, dim <= 4. Degenerate sets give 0.
Rational convex_hull_volume(const PointSet& a, const Caps& caps = default_caps());

/// 1-D only: divides out r = gcd of the nonzero elements. Requires 0 in a.
std::pair<PointSet, std::int64_t> gcd_normalize(const PointSet& a);

}  // namespace sumsetlab
