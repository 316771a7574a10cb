#include "sumsetlab/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "sumsetlab/numeric.hpp"
#include "sumsetlab/parallel.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

bool is_primitive(const std::vector<i64>& v) {
    u64 g = 0;
    for (i64 c : v) g = gcd_u64(g, static_cast<u64>(c < 0 ? -(unsigned long long)c : c));
    return g == 1;
}

/// First nonzero coordinate positive (v and -v give the same family).
bool sign_normalized(const std::vector<i64>& v) {
    for (i64 c : v) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;  // zero vector
}

std::vector<i64> levels_of(const PointSet& b, const std::vector<i64>& normal) {
    const std::size_t k = static_cast<std::size_t>(b.dim());
    std::vector<i64> dots;
    dots.reserve(b.size());
    const i64* flat = b.flat().data();
    for (std::size_t i = 0; i < b.size(); ++i) {
        i128 dot = 0;
        for (std::size_t c = 0; c < k; ++c) dot += i128(normal[c]) * flat[i * k + c];
        if (dot < std::numeric_limits<i64>::min() || dot > std::numeric_limits<i64>::max())
            throw CapacityError("cover_number: dot product overflows");
        dots.push_back(static_cast<i64>(dot));
    }
    std::sort(dots.begin(), dots.end());
    dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
    return dots;
}

/// Odometer over [-bound, bound]^k in lexicographic order.
bool advance(std::vector<i64>& v, i64 bound) {
    for (std::size_t axis = v.size(); axis-- > 0;) {
        if (v[axis] < bound) {
            ++v[axis];
            std::fill(v.begin() + static_cast<std::ptrdiff_t>(axis) + 1, v.end(), -bound);
            return true;
        }
    }
    return false;
}

}  // namespace

CoverCertificate cover_number(const PointSet& b, std::int64_t normal_bound, unsigned threads) {
    if (b.empty()) throw EmptyInputError("cover_number: empty set");
    const int k = b.dim();
    if (normal_bound <= 0) normal_bound = std::max<i64>(1, 2 * b.coordinate_diameter());

    // Capacity guard on the normal family size.
    long double family = 1;
    for (int i = 0; i < k; ++i) family *= 2.0L * static_cast<long double>(normal_bound) + 1;
    if (family > 2e8L) throw CapacityError("cover_number: normal family too large; lower --normal-bound");

    if (k == 1) {
        // Only primitive normal is (1); levels are the points themselves.
        CoverCertificate cert;
        cert.normal = {1};
        cert.levels = b.flat();
        cert.count = cert.levels.size();
        cert.normal_bound = normal_bound;
        return cert;
    }

    // Collect sign-normalized primitive normals in lex order; the first
    // minimum found is the lexicographically least one.
    std::vector<std::vector<i64>> normals;
    std::vector<i64> v(static_cast<std::size_t>(k), -normal_bound);
    for (;;) {
        if (sign_normalized(v) && is_primitive(v)) normals.push_back(v);
        if (!advance(v, normal_bound)) break;
    }

    threads = resolve_threads(threads);
    std::vector<u64> counts(normals.size());
    parallel_for_index(normals.size(), threads,
                       [&](std::size_t i) { counts[i] = levels_of(b, normals[i]).size(); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < normals.size(); ++i)
        if (counts[i] < counts[best]) best = i;  // strict: keeps lex-least on ties

    CoverCertificate cert;
    cert.normal = normals[best];
    cert.levels = levels_of(b, cert.normal);
    cert.count = cert.levels.size();
    cert.normal_bound = normal_bound;
    return cert;
}

bool certificate_covers(const CoverCertificate& cert, const PointSet& b) {
    if (cert.normal.size() != static_cast<std::size_t>(b.dim())) return false;
    std::vector<i64> lv = levels_of(b, cert.normal);
    return lv == cert.levels && cert.count == lv.size();
}

std::uint64_t scaled_cover_lower_bound(const PointSet& b, std::uint64_t ell, std::int64_t normal_bound,
                                       const Caps& caps) {
    if (ell == 0) throw ArgumentError("scaled_cover_lower_bound: ell must be positive");
    if (normal_bound <= 0) normal_bound = std::max<i64>(1, 2 * b.coordinate_diameter());
    CoverCertificate base = cover_number(b, normal_bound);
    PointSet scaled = iterated_sumset(b, ell, caps);
    CoverCertificate big = cover_number(scaled, normal_bound);
    // For any common normal the levels of ell*b are the ell-fold sumset of
    // the levels of b, so the 1-D bound applies normal by normal.
    u64 floor = ell * (base.count - 1) + 1;
    if (big.count < floor)
        throw std::logic_error("scaled_cover_lower_bound: scaled cover below the provable floor");
    return big.count;
}

PointSet simplex(int k, std::int64_t n, const Caps& caps) {
    if (k < 1 || k > 4) throw UnsupportedDimensionError("simplex: k must be in [1, 4]");
    if (n < 0) throw ArgumentError("simplex: negative n");
    Int size = binomial(static_cast<u64>(n) + static_cast<u64>(k), static_cast<u64>(k));
    if (size > caps.max_enumeration) throw CapacityError("simplex: size above enumeration cap");
    std::vector<i64> flat;
    std::vector<i64> x(static_cast<std::size_t>(k), 0);
    // odometer over [0, n]^k filtered by coordinate sum
    for (;;) {
        i64 sum = std::accumulate(x.begin(), x.end(), i64{0});
        if (sum <= n) flat.insert(flat.end(), x.begin(), x.end());
        std::size_t axis = x.size();
        bool done = true;
        while (axis-- > 0) {
            if (x[axis] < n) {
                ++x[axis];
                std::fill(x.begin() + static_cast<std::ptrdiff_t>(axis) + 1, x.end(), 0);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return PointSet::from_canonical(k, std::move(flat));
}

PointSet cone(int k, std::int64_t n, const Caps& caps) {
    if (k < 1 || k > 4) throw UnsupportedDimensionError("cone: k must be in [1, 4]");
    if (n < 0) throw ArgumentError("cone: negative n");
    Int size = binomial(static_cast<u64>(n) + static_cast<u64>(k), static_cast<u64>(k));
    if (size > caps.max_enumeration) throw CapacityError("cone: size above enumeration cap");
    std::vector<i64> flat;
    std::vector<i64> x(static_cast<std::size_t>(k), 0);
    for (;;) {
        i64 height = x[static_cast<std::size_t>(k - 1)];
        i64 sum = std::accumulate(x.begin(), x.end() - 1, i64{0});
        if (sum <= height) flat.insert(flat.end(), x.begin(), x.end());
        std::size_t axis = x.size();
        bool done = true;
        while (axis-- > 0) {
            if (x[axis] < n) {
                ++x[axis];
                std::fill(x.begin() + static_cast<std::ptrdiff_t>(axis) + 1, x.end(), 0);
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return PointSet::from_canonical(k, std::move(flat));
}

namespace {

/// Exact affine-rank test: do the k+1 points span a k-dimensional simplex?
bool affinely_independent(const std::vector<std::span<const i64>>& pts) {
    const std::size_t k = pts[0].size();
    const std::size_t rows = pts.size() - 1;
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(k));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < k; ++c)
            m[r][c] = Rational(Int(pts[r + 1][c]) - Int(pts[0][c]));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < k; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank == rows;
}

}  // namespace

bool in_general_position(const PointSet& a) {
    const int k = a.dim();
    const std::size_t n = a.size();
    if (n <= static_cast<std::size_t>(k)) return true;
    // all (k+1)-subsets must have affine rank k
    std::vector<std::size_t> idx(static_cast<std::size_t>(k) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) idx[i] = i;
    for (;;) {
        std::vector<std::span<const i64>> pts;
        pts.reserve(idx.size());
        for (std::size_t i : idx) pts.push_back(a.point(i));
        if (!affinely_independent(pts)) return false;
        // next combination
        std::size_t pos = idx.size();
        bool done = true;
        while (pos-- > 0) {
            if (idx[pos] < n - (idx.size() - pos)) {
                ++idx[pos];
                for (std::size_t j = pos + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return true;
}

PointSet general_position_points(int k, std::size_t count, std::uint64_t seed) {
    if (k < 2) throw ArgumentError("general_position_points: k must be at least 2");
    if (count == 0) return PointSet(k);
    Rng rng(seed);
    const i64 side = 10 * static_cast<i64>(count) * static_cast<i64>(count);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::vector<i64>> pts;
        pts.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<i64> p(static_cast<std::size_t>(k));
            for (auto& c : p) c = rng.uniform(0, side);
            pts.push_back(std::move(p));
        }
        PointSet s = PointSet::of(k, pts);
        if (s.size() == count && in_general_position(s)) return s;
    }
    throw GenerationError("general_position_points: no general-position sample after 64 attempts");
}

}  // namespace sumsetlab
