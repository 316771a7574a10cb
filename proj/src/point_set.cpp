#include "sumsetlab/point_set.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>

namespace sumsetlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

constexpr i64 kBitsetRangeLimit = i64{1} << 24;

[[noreturn]] void overflow() { throw CapacityError("coordinate arithmetic exceeds 64-bit range"); }

i64 add_or_throw(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

/// Lexicographic row comparison for flat storage.
struct RowLess {
    int dim;
    const i64* data;
    bool operator()(std::size_t a, std::size_t b) const {
        return std::lexicographical_compare(data + a * dim, data + (a + 1) * dim, data + b * dim,
                                            data + (b + 1) * dim);
    }
};

void canonicalize(int dim, std::vector<i64>& flat) {
    const std::size_t n = flat.size() / static_cast<std::size_t>(dim);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), RowLess{dim, flat.data()});
    std::vector<i64> out;
    out.reserve(flat.size());
    const i64* d = flat.data();
    for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t i = idx[pos];
        if (pos > 0) {
            std::size_t p = idx[pos - 1];
            if (std::equal(d + i * dim, d + (i + 1) * dim, d + p * dim)) continue;
        }
        out.insert(out.end(), d + i * dim, d + (i + 1) * dim);
    }
    flat = std::move(out);
}

/// Sorted unique 1-D sumset. Dense path: bit-vector convolution over the
/// bounding interval; sparse path: sort-merge of all pairs.
std::vector<i64> sumset_line(const std::vector<i64>& u, const std::vector<i64>& v, const Caps& caps) {
    i128 lo = i128(u.front()) + v.front();
    i128 hi = i128(u.back()) + v.back();
    if (lo < std::numeric_limits<i64>::min() || hi > std::numeric_limits<i64>::max()) overflow();
    i128 width = hi - lo + 1;

    if (width <= kBitsetRangeLimit) {
        // Shift-OR the bitset of one factor by each element of the other;
        // iterate over the side that costs fewer word operations.
        const bool u_outer = i128(u.size()) * ((v.back() - v.front()) / 64 + 1) <=
                             i128(v.size()) * ((u.back() - u.front()) / 64 + 1);
        const std::vector<i64>& outer = u_outer ? u : v;
        const std::vector<i64>& inner = u_outer ? v : u;

        const i64 ibase = inner.front();
        const std::size_t iwidth = static_cast<std::size_t>(inner.back() - ibase) + 1;
        const std::size_t iwords = (iwidth + 63) / 64;
        std::vector<u64> ibits(iwords, 0);
        for (i64 x : inner) {
            std::size_t off = static_cast<std::size_t>(x - ibase);
            ibits[off >> 6] |= u64{1} << (off & 63);
        }
        const std::size_t rwidth = static_cast<std::size_t>(width);
        const std::size_t rwords = rwidth / 64 + 2;
        std::vector<u64> rbits(rwords, 0);
        const i64 base = static_cast<i64>(lo);
        for (i64 x : outer) {
            const std::size_t shift = static_cast<std::size_t>(x + ibase - base);
            const std::size_t word = shift >> 6;
            const unsigned bit = shift & 63;
            if (bit == 0) {
                for (std::size_t w = 0; w < iwords; ++w) rbits[word + w] |= ibits[w];
            } else {
                for (std::size_t w = 0; w < iwords; ++w) {
                    rbits[word + w] |= ibits[w] << bit;
                    rbits[word + w + 1] |= ibits[w] >> (64 - bit);
                }
            }
        }
        std::vector<i64> out;
        for (std::size_t w = 0; w < rwords; ++w) {
            u64 bits = rbits[w];
            while (bits) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                out.push_back(base + static_cast<i64>(w * 64 + b));
                bits &= bits - 1;
            }
        }
        return out;
    }

    if (i128(u.size()) * v.size() > caps.max_pairs)
        throw CapacityError("sumset pair budget exceeded on a sparse line");
    std::vector<i64> sums;
    sums.reserve(u.size() * v.size());
    for (i64 x : u)
        for (i64 y : v) sums.push_back(x + y);  // bounds checked above
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

/// View of one line group: points sharing all coordinates except `axis`.
struct LineGroup {
    std::vector<i64> key;     // the fixed coordinates, in axis order
    std::vector<i64> values;  // sorted coordinates along the grouping axis
};

std::vector<LineGroup> group_by_lines(const PointSet& a, int axis) {
    const int k = a.dim();
    std::map<std::vector<i64>, std::vector<i64>> groups;
    std::vector<i64> key(static_cast<std::size_t>(k) - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        std::size_t j = 0;
        for (int c = 0; c < k; ++c)
            if (c != axis - 1) key[j++] = p[static_cast<std::size_t>(c)];
        groups[key].push_back(p[static_cast<std::size_t>(axis - 1)]);
    }
    std::vector<LineGroup> out;
    out.reserve(groups.size());
    for (auto& [kv, vals] : groups) {
        std::sort(vals.begin(), vals.end());
        out.push_back({kv, std::move(vals)});
    }
    return out;
}

int widest_axis(const PointSet& a, const PointSet& b) {
    int best = a.dim();
    i128 best_width = -1;
    for (int axis = 1; axis <= a.dim(); ++axis) {
        auto [alo, ahi] = a.coord_range(axis);
        auto [blo, bhi] = b.coord_range(axis);
        i128 w = (i128(ahi) - alo) + (i128(bhi) - blo);
        if (w > best_width) {
            best_width = w;
            best = axis;
        }
    }
    return best;
}

void check_sumset_pre(const PointSet& a, const PointSet& b) {
    if (a.dim() != b.dim())
        throw DimensionError("sumset: operands have dimensions " + std::to_string(a.dim()) + " and " +
                             std::to_string(b.dim()));
    if (a.empty() || b.empty()) throw EmptyInputError("sumset: empty operand");
}

/// Core of sumset/sumset_size: runs fn(key, line_values) once per output line.
template <typename Fn>
void for_each_sum_line(const PointSet& a, const PointSet& b, int axis, const Caps& caps, Fn&& fn) {
    auto ga = group_by_lines(a, axis);
    auto gb = group_by_lines(b, axis);
    std::map<std::vector<i64>, std::vector<const std::vector<i64>*>> pending;
    std::map<std::vector<i64>, std::vector<std::vector<i64>>> lines;
    // Collect per-key line sums, then union them.
    for (const auto& la : ga) {
        for (const auto& lb : gb) {
            std::vector<i64> key(la.key.size());
            for (std::size_t i = 0; i < key.size(); ++i) key[i] = add_or_throw(la.key[i], lb.key[i]);
            lines[std::move(key)].push_back(sumset_line(la.values, lb.values, caps));
        }
    }
    for (auto& [key, contributions] : lines) {
        if (contributions.size() == 1) {
            fn(key, contributions.front());
            continue;
        }
        std::vector<i64> merged;
        for (auto& c : contributions) {
            std::vector<i64> next;
            next.reserve(merged.size() + c.size());
            std::set_union(merged.begin(), merged.end(), c.begin(), c.end(), std::back_inserter(next));
            merged = std::move(next);
        }
        fn(key, merged);
    }
}

}  // namespace

const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

PointSet::PointSet(int dim) : dim_(dim) {
    if (dim < 1) throw DimensionError("PointSet: dimension must be positive");
}

PointSet PointSet::of(int dim, const std::vector<std::vector<std::int64_t>>& points) {
    PointSet s(dim);
    s.flat_.reserve(points.size() * static_cast<std::size_t>(dim));
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim) throw DimensionError("PointSet: tuple length != dim");
        s.flat_.insert(s.flat_.end(), p.begin(), p.end());
    }
    canonicalize(dim, s.flat_);
    return s;
}

PointSet PointSet::of_1d(std::vector<std::int64_t> values) {
    PointSet s(1);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    s.flat_ = std::move(values);
    return s;
}

PointSet PointSet::from_canonical(int dim, std::vector<std::int64_t> flat) {
    PointSet s(dim);
    if (flat.size() % static_cast<std::size_t>(dim) != 0)
        throw DimensionError("PointSet: flat size not a multiple of dim");
    s.flat_ = std::move(flat);
    return s;
}

std::vector<std::int64_t> PointSet::values1d() const {
    if (dim_ != 1) throw DimensionError("values1d: set is not one-dimensional");
    return flat_;
}

bool PointSet::contains(std::span<const std::int64_t> p) const {
    if (static_cast<int>(p.size()) != dim_) return false;
    const std::size_t n = size();
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto row = point(mid);
        if (std::lexicographical_compare(row.begin(), row.end(), p.begin(), p.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo < n && std::equal(point(lo).begin(), point(lo).end(), p.begin());
}

bool PointSet::is_subset_of(const PointSet& other) const {
    if (dim_ != other.dim_) return false;
    // Both sides canonical: a single merge walk over rows.
    std::size_t j = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        auto p = point(i);
        for (;; ++j) {
            if (j >= other.size()) return false;
            auto q = other.point(j);
            if (std::lexicographical_compare(q.begin(), q.end(), p.begin(), p.end())) continue;
            if (std::equal(q.begin(), q.end(), p.begin())) break;
            return false;
        }
    }
    return true;
}

std::pair<std::int64_t, std::int64_t> PointSet::coord_range(int axis) const {
    if (axis < 1 || axis > dim_) throw ArgumentError("coord_range: axis out of range");
    if (empty()) throw EmptyInputError("coord_range: empty set");
    i64 lo = std::numeric_limits<i64>::max();
    i64 hi = std::numeric_limits<i64>::min();
    for (std::size_t i = static_cast<std::size_t>(axis - 1); i < flat_.size();
         i += static_cast<std::size_t>(dim_)) {
        lo = std::min(lo, flat_[i]);
        hi = std::max(hi, flat_[i]);
    }
    return {lo, hi};
}

std::int64_t PointSet::coordinate_diameter() const {
    i64 best = 0;
    for (int axis = 1; axis <= dim_; ++axis) {
        auto [lo, hi] = coord_range(axis);
        best = std::max(best, hi - lo);
    }
    return best;
}

Int Box::lattice_point_count() const {
    Int prod = 1;
    for (i64 s : sides) {
        if (s < 0) throw ArgumentError("Box: negative side");
        prod *= Int(s) + 1;
    }
    return prod;
}

PointSet Box::enumerate(const Caps& caps) const {
    if (dim < 1 || static_cast<int>(sides.size()) != dim) throw DimensionError("Box: bad dimension");
    Int total = lattice_point_count();
    if (total > caps.max_enumeration) throw CapacityError("Box::enumerate: lattice point count above cap");
    std::vector<i64> flat;
    flat.reserve(static_cast<std::size_t>(total) * static_cast<std::size_t>(dim));
    std::vector<i64> x(static_cast<std::size_t>(dim), 0);
    for (;;) {
        flat.insert(flat.end(), x.begin(), x.end());
        int axis = dim - 1;
        while (axis >= 0) {
            if (x[static_cast<std::size_t>(axis)] < sides[static_cast<std::size_t>(axis)]) {
                ++x[static_cast<std::size_t>(axis)];
                std::fill(x.begin() + axis + 1, x.end(), 0);
                break;
            }
            --axis;
        }
        if (axis < 0) break;
    }
    return PointSet::from_canonical(dim, std::move(flat));
}

PointSet sumset(const PointSet& a, const PointSet& b, const Caps& caps) {
    check_sumset_pre(a, b);
    const int k = a.dim();
    if (k == 1) {
        auto line = sumset_line(a.flat(), b.flat(), caps);
        if (line.size() > caps.max_points) throw CapacityError("sumset: result above max_points");
        return PointSet::from_canonical(1, std::move(line));
    }
    const int axis = widest_axis(a, b);
    std::vector<i64> flat;
    u64 count = 0;
    for_each_sum_line(a, b, axis, caps, [&](const std::vector<i64>& key, const std::vector<i64>& vals) {
        count += vals.size();
        if (count > caps.max_points) throw CapacityError("sumset: result above max_points");
        std::vector<i64> row(static_cast<std::size_t>(k));
        std::size_t j = 0;
        for (int c = 0; c < k; ++c)
            if (c != axis - 1) row[static_cast<std::size_t>(c)] = key[j++];
        for (i64 v : vals) {
            row[static_cast<std::size_t>(axis - 1)] = v;
            flat.insert(flat.end(), row.begin(), row.end());
        }
    });
    if (axis != k) canonicalize(k, flat);  // grouping along a non-final axis breaks lex order
    return PointSet::from_canonical(k, std::move(flat));
}

std::uint64_t sumset_size(const PointSet& a, const PointSet& b, const Caps& caps) {
    check_sumset_pre(a, b);
    if (a.dim() == 1) return sumset_line(a.flat(), b.flat(), caps).size();
    u64 count = 0;
    for_each_sum_line(a, b, widest_axis(a, b), caps,
                      [&](const std::vector<i64>&, const std::vector<i64>& vals) { count += vals.size(); });
    return count;
}

PointSet translate(const PointSet& a, std::span<const std::int64_t> t) {
    if (static_cast<int>(t.size()) != a.dim()) throw DimensionError("translate: offset length != dim");
    std::vector<i64> flat = a.flat();
    const std::size_t k = static_cast<std::size_t>(a.dim());
    for (std::size_t i = 0; i < flat.size(); ++i) flat[i] = add_or_throw(flat[i], t[i % k]);
    return PointSet::from_canonical(a.dim(), std::move(flat));  // translation preserves lex order
}

PointSet dilate(const PointSet& a, std::int64_t c) {
    if (a.empty()) throw EmptyInputError("dilate: empty set");
    std::vector<i64> flat = a.flat();
    for (i64& v : flat) v = checked_mul(v, c);
    canonicalize(a.dim(), flat);  // c <= 0 reverses or collapses order
    return PointSet::from_canonical(a.dim(), std::move(flat));
}

PointSet minus(const PointSet& a) { return dilate(a, -1); }

PointSet difference_set(const PointSet& a, const PointSet& b, const Caps& caps) {
    return sumset(a, minus(b), caps);
}

PointSet iterated_sumset(const PointSet& a, std::uint64_t h, const Caps& caps) {
    if (a.empty()) throw EmptyInputError("iterated_sumset: empty set");
    if (h == 0) throw ArgumentError("iterated_sumset: h = 0 is undefined by convention");
    if (h == 1) return a;
    PointSet half = iterated_sumset(a, h / 2, caps);
    PointSet result = sumset(half, half, caps);
    if (h % 2 == 1) result = sumset(result, a, caps);
    return result;
}

std::pair<PointSet, std::int64_t> gcd_normalize(const PointSet& a) {
    if (a.dim() != 1) throw DimensionError("gcd_normalize: set must be one-dimensional");
    if (a.size() < 2) throw ArgumentError("gcd_normalize: need at least two elements");
    i64 zero = 0;
    if (!a.contains(std::span<const i64>(&zero, 1)))
        throw ArgumentError("gcd_normalize: set must contain 0");
    u64 g = 0;
    for (i64 v : a.flat()) g = std::gcd(g, static_cast<u64>(v < 0 ? -(unsigned long long)v : v));
    if (g == 0) throw ArgumentError("gcd_normalize: all elements are zero");
    std::vector<i64> vals = a.flat();
    for (i64& v : vals) v /= static_cast<i64>(g);
    return {PointSet::from_canonical(1, std::move(vals)), static_cast<i64>(g)};
}

// --- convex hull volume ------------------------------------------------------
//
// Placing triangulation: insert points one at a time and cone the new point
// over the strictly visible boundary facets. The accumulated simplices
// partition the hull up to measure zero, so the volume is the sum of
// |det| / k! over all simplices, computed in exact integer arithmetic.

namespace {

/// Exact determinant of a k x k integer matrix by cofactor/Gauss over Int.
Int int_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int result = 0;
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Int cofactor = m[0][c] * int_det(minor);
        result += (c % 2 == 0) ? cofactor : -cofactor;
    }
    return result;
}

/// Orientation of apex against the hyperplane spanned by a k-vertex face:
/// det of the k difference vectors face[r] - apex.
Int orient(const std::vector<std::vector<i64>>& pts, const std::vector<std::size_t>& face, std::size_t apex) {
    const std::size_t k = pts[0].size();
    std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) m[r][c] = Int(pts[face[r]][c]) - Int(pts[apex][c]);
    return int_det(m);
}

}  // namespace

Rational convex_hull_volume(const PointSet& a, const Caps& caps) {
    if (a.empty()) throw EmptyInputError("convex_hull_volume: empty set");
    const int k = a.dim();
    if (k > 4) throw UnsupportedDimensionError("convex_hull_volume: dim > 4");
    if (a.size() > 10000) throw CapacityError("convex_hull_volume: too many points");

    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::vector<i64>> pts(a.size(), std::vector<i64>(kk));
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        std::copy(p.begin(), p.end(), pts[i].begin());
    }

    // Seed simplex: greedily pick k+1 affinely independent points.
    std::vector<std::size_t> seed{0};
    for (std::size_t i = 1; i < pts.size() && seed.size() < kk + 1; ++i) {
        seed.push_back(i);
        std::vector<std::vector<Int>> m(seed.size() - 1, std::vector<Int>(kk));
        for (std::size_t r = 1; r < seed.size(); ++r)
            for (std::size_t c = 0; c < kk; ++c)
                m[r - 1][c] = Int(pts[seed[r]][c]) - Int(pts[seed[0]][c]);
        // require full row rank: check via rank of the difference matrix
        std::vector<std::vector<Rational>> rm(m.size(), std::vector<Rational>(kk));
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < kk; ++c) rm[r][c] = Rational(m[r][c]);
        std::size_t rank = 0;
        for (std::size_t c = 0; c < kk && rank < rm.size(); ++c) {
            std::size_t pivot = rank;
            while (pivot < rm.size() && rm[pivot][c] == 0) ++pivot;
            if (pivot == rm.size()) continue;
            std::swap(rm[pivot], rm[rank]);
            for (std::size_t r = rank + 1; r < rm.size(); ++r) {
                if (rm[r][c] == 0) continue;
                Rational f = rm[r][c] / rm[rank][c];
                for (std::size_t j = c; j < kk; ++j) rm[r][j] -= f * rm[rank][j];
            }
            ++rank;
        }
        if (rank != seed.size() - 1) seed.pop_back();
    }
    if (seed.size() < kk + 1) return Rational(0);  // degenerate: hull has zero k-volume

    struct Simplex {
        std::vector<std::size_t> v;  // k+1 vertex indices
    };
    std::vector<Simplex> simplices{{seed}};

    auto simplex_det = [&](const std::vector<std::size_t>& v) {
        std::vector<std::vector<Int>> m(kk, std::vector<Int>(kk));
        for (std::size_t r = 0; r < kk; ++r)
            for (std::size_t c = 0; c < kk; ++c) m[r][c] = Int(pts[v[r + 1]][c]) - Int(pts[v[0]][c]);
        return int_det(m);
    };

    std::vector<bool> in_seed(pts.size(), false);
    for (std::size_t s : seed) in_seed[s] = true;

    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (in_seed[p]) continue;
        // Boundary faces: (k)-subsets appearing in exactly one simplex.
        std::map<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>> face_info;  // -> (count, opp)
        for (const auto& s : simplices) {
            for (std::size_t drop = 0; drop < s.v.size(); ++drop) {
                std::vector<std::size_t> face;
                face.reserve(kk);
                for (std::size_t i = 0; i < s.v.size(); ++i)
                    if (i != drop) face.push_back(s.v[i]);
                std::sort(face.begin(), face.end());
                auto it = face_info.find(face);
                if (it == face_info.end())
                    face_info[face] = {1, s.v[drop]};
                else
                    it->second.first++;
            }
        }
        for (const auto& [face, info] : face_info) {
            if (info.first != 1) continue;
            Int side_p = orient(pts, face, p);
            if (side_p == 0) continue;
            Int side_in = orient(pts, face, info.second);
            // strictly visible: p on the opposite side from the simplex interior
            if ((side_p > 0) == (side_in > 0)) continue;
            std::vector<std::size_t> nv = face;
            nv.push_back(p);
            simplices.push_back({nv});
        }
        if (simplices.size() > 200000) throw CapacityError("convex_hull_volume: triangulation too large");
    }

    Int total = 0;
    for (const auto& s : simplices) {
        Int d = simplex_det(s.v);
        total += d < 0 ? -d : d;
    }
    Int fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    (void)caps;
    return Rational(total, fact);
}

// --- numeric helpers ---------------------------------------------------------

std::string rational_to_string(const Rational& r) {
    Int n = rational_num(r), d = rational_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ArgumentError("rational_from_string: zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ArgumentError("rational_from_string: cannot parse '" + s + "'");
    }
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) { return add_or_throw(a, b); }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

}  // namespace sumsetlab
