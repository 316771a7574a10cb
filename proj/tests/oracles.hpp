#pragma once

// Independent reference implementations used as test oracles. Everything here
// is deliberately naive (double loops, full enumeration) and shares no code
// with the kernels it checks.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sumsetlab/numeric.hpp"
#include "sumsetlab/point_set.hpp"
#include "sumsetlab/rng.hpp"

namespace oracles {

using sumsetlab::PointSet;
using sumsetlab::Rational;

using Row = std::vector<std::int64_t>;

inline std::vector<Row> rows_of(const PointSet& s) {
    std::vector<Row> rows;
    rows.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s.point(i);
        rows.emplace_back(p.begin(), p.end());
    }
    return rows;
}

/// Plain double-loop sumset over std::set.
inline PointSet naive_sumset(const PointSet& a, const PointSet& b) {
    std::set<Row> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto pa = a.point(i);
            auto pb = b.point(j);
            Row r(pa.size());
            for (std::size_t c = 0; c < pa.size(); ++c) r[c] = pa[c] + pb[c];
            out.insert(std::move(r));
        }
    }
    std::vector<Row> rows(out.begin(), out.end());
    return PointSet::of(a.dim(), rows);
}

/// h-fold sumset as a fold of h-1 naive sumsets.
inline PointSet naive_iterated(const PointSet& a, unsigned h) {
    PointSet acc = a;
    for (unsigned i = 1; i < h; ++i) acc = naive_sumset(acc, a);
    return acc;
}

inline PointSet random_set(sumsetlab::Rng& rng, int dim, std::size_t max_points, std::int64_t lo,
                           std::int64_t hi) {
    std::size_t count = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_points)));
    std::vector<Row> rows;
    for (std::size_t i = 0; i < count; ++i) {
        Row r(static_cast<std::size_t>(dim));
        for (auto& c : r) c = rng.uniform(lo, hi);
        rows.push_back(std::move(r));
    }
    return PointSet::of(dim, rows);
}

/// Brute-force optimum of the gap-hull problem over the bounded-parameter
/// family: positive coefficients up to diam(b), box sizes with
/// |P| <= diam(b) + 1, X from b - P. Returns the minimal |X + P|, or nullopt
/// when the family contains no cover (only possible for k = 0).
inline std::optional<std::uint64_t> hull_oracle(const PointSet& b, std::uint64_t n, int k) {
    const auto vals = b.values1d();
    const std::int64_t base = vals.front();
    std::vector<std::int64_t> b0(vals);
    for (auto& v : b0) v -= base;
    const std::int64_t diam = b0.back();

    std::optional<std::uint64_t> best;
    if (b0.size() <= n) best = b0.size();  // P a single point
    if (k == 0) return best;

    // images of all candidate GAPs, dimensions 1..k, coefficient tuples in
    // [1, diam]^kk (not canonicalized; duplicates are harmless)
    std::vector<std::vector<std::int64_t>> images;
    std::vector<std::int64_t> sides, coeffs;
    auto emit = [&](const std::vector<std::int64_t>& s, const std::vector<std::int64_t>& c) {
        std::vector<std::int64_t> img{0};
        for (std::size_t ax = 0; ax < s.size(); ++ax) {
            std::vector<std::int64_t> next;
            for (std::int64_t j = 0; j <= s[ax]; ++j)
                for (auto v : img) next.push_back(v + j * c[ax]);
            img = std::move(next);
        }
        std::size_t raw = img.size();
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img.size() == raw) images.push_back(std::move(img));  // 1-proper only
    };
    for (int kk = 1; kk <= k; ++kk) {
        // odometer over sides >= 1 with product of (s+1) <= diam + 1
        std::vector<std::int64_t> s(static_cast<std::size_t>(kk), 1);
        for (;;) {
            std::uint64_t prod = 1;
            bool fits = true;
            for (auto v : s) {
                prod *= static_cast<std::uint64_t>(v) + 1;
                if (prod > static_cast<std::uint64_t>(diam) + 1) {
                    fits = false;
                    break;
                }
            }
            if (fits) {
                // all coefficient tuples in [1, diam]^kk
                std::vector<std::int64_t> c(static_cast<std::size_t>(kk), 1);
                for (;;) {
                    emit(s, c);
                    int ax = kk - 1;
                    while (ax >= 0 && c[static_cast<std::size_t>(ax)] == diam) {
                        c[static_cast<std::size_t>(ax)] = 1;
                        --ax;
                    }
                    if (ax < 0) break;
                    ++c[static_cast<std::size_t>(ax)];
                }
            }
            int ax = kk - 1;
            bool advanced = false;
            while (ax >= 0) {
                ++s[static_cast<std::size_t>(ax)];
                std::uint64_t p = 1;
                bool ok = true;
                for (auto v : s) {
                    p *= static_cast<std::uint64_t>(v) + 1;
                    if (p > static_cast<std::uint64_t>(diam) + 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    advanced = true;
                    break;
                }
                s[static_cast<std::size_t>(ax)] = 1;
                --ax;
            }
            if (!advanced) break;
        }
    }
    std::sort(images.begin(), images.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& img : images) {
        if (best && img.size() >= *best) break;
        // translate candidates: every x with (x + img) meeting b0
        std::set<std::int64_t> xs;
        for (auto v : b0)
            for (auto p : img) xs.insert(v - p);
        std::vector<std::int64_t> xcand(xs.begin(), xs.end());
        std::vector<std::uint64_t> masks(xcand.size(), 0);
        for (std::size_t xi = 0; xi < xcand.size(); ++xi)
            for (std::size_t i = 0; i < b0.size(); ++i)
                if (std::binary_search(img.begin(), img.end(), b0[i] - xcand[xi]))
                    masks[xi] |= std::uint64_t{1} << i;
        const std::uint64_t full = (std::uint64_t{1} << b0.size()) - 1;

        auto union_size = [&](const std::vector<std::size_t>& chosen) {
            std::set<std::int64_t> u;
            for (auto xi : chosen)
                for (auto p : img) u.insert(xcand[xi] + p);
            return static_cast<std::uint64_t>(u.size());
        };
        // subsets of translates of size <= n (n is tiny in the oracle's uses)
        std::vector<std::size_t> chosen;
        std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t covered) {
            if (covered == full) {
                std::uint64_t sz = union_size(chosen);
                if (!best || sz < *best) best = sz;
                return;
            }
            if (chosen.size() == n) return;
            for (std::size_t xi = from; xi < xcand.size(); ++xi) {
                chosen.push_back(xi);
                rec(xi + 1, covered | masks[xi]);
                chosen.pop_back();
            }
        };
        rec(0, 0);
    }
    return best;
}

/// Pointwise-minimal h satisfying h(x+y)^(1/d) >= f(x)^(1/d) + g(y)^(1/d)
/// when f and g take d-th-power values a^d, b^d: h_min(s) = max (a+b)^d.
inline std::map<std::int64_t, Rational> minimal_h(const std::map<std::int64_t, Rational>& f_roots,
                                                  const std::map<std::int64_t, Rational>& g_roots,
                                                  unsigned d) {
    std::map<std::int64_t, Rational> h;
    for (const auto& [x, a] : f_roots)
        for (const auto& [y, b] : g_roots) {
            Rational sum = a + b;
            Rational powed = sumsetlab::rational_pow(sum, d);
            auto it = h.find(x + y);
            if (it == h.end() || it->second < powed) h[x + y] = powed;
        }
    return h;
}

}  // namespace oracles
