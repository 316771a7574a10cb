#include "sumsetlab/gap.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

namespace sumsetlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

void validate(const Gap& g) {
    if (g.ambient_dim < 0) throw ArgumentError("Gap: negative dimension");
    if (static_cast<int>(g.sides.size()) != g.ambient_dim ||
        static_cast<int>(g.coeffs.size()) != g.ambient_dim)
        throw DimensionError("Gap: sides/coeffs length != ambient_dim");
    for (i64 s : g.sides)
        if (s < 0) throw ArgumentError("Gap: negative side length");
}

/// Image extent check: |offset| + sum sides_i * |coeffs_i| must fit int64.
void check_extent(const Gap& g) {
    i128 lo = g.offset, hi = g.offset;
    for (int i = 0; i < g.ambient_dim; ++i) {
        i128 reach = i128(g.sides[static_cast<std::size_t>(i)]) * g.coeffs[static_cast<std::size_t>(i)];
        if (reach >= 0)
            hi += reach;
        else
            lo += reach;
    }
    if (lo < std::numeric_limits<i64>::min() || hi > std::numeric_limits<i64>::max())
        throw CapacityError("Gap: image exceeds 64-bit coordinate range");
}

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

}  // namespace

Int Gap::box_point_count() const {
    Int prod = 1;
    for (i64 s : sides) prod *= Int(s) + 1;
    return prod;
}

std::string Gap::record() const {
    std::ostringstream os;
    os << "gap k=" << ambient_dim << " sides=";
    for (std::size_t i = 0; i < sides.size(); ++i) os << (i ? "," : "") << sides[i];
    os << " coeffs=";
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
    os << " offset=" << offset;
    return os.str();
}

Gap Gap::parse_record(const std::string& line) {
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag != "gap") throw ArgumentError("Gap record must start with 'gap'");
    Gap g;
    std::string field;
    bool saw_k = false;
    while (is >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw ArgumentError("Gap record: malformed field '" + field + "'");
        std::string key = field.substr(0, eq);
        std::string val = field.substr(eq + 1);
        if (key == "k") {
            g.ambient_dim = std::stoi(val);
            saw_k = true;
        } else if (key == "sides") {
            g.sides = parse_int_list(val);
        } else if (key == "coeffs") {
            g.coeffs = parse_int_list(val);
        } else if (key == "offset") {
            g.offset = std::stoll(val);
        } else {
            throw ArgumentError("Gap record: unknown field '" + key + "'");
        }
    }
    if (!saw_k) throw ArgumentError("Gap record: missing k=");
    validate(g);
    return g;
}

PointSet enumerate(const Gap& g, const Caps& caps) {
    validate(g);
    check_extent(g);
    if (g.box_point_count() > caps.max_enumeration)
        throw CapacityError("Gap enumeration above cap");
    // The image is the offset plus a sum of k arithmetic progressions;
    // build it by iterated 1-D sumsets rather than walking the box.
    std::vector<i64> image{g.offset};
    PointSet acc = PointSet::of_1d(image);
    for (int i = 0; i < g.ambient_dim; ++i) {
        i64 n = g.sides[static_cast<std::size_t>(i)];
        i64 c = g.coeffs[static_cast<std::size_t>(i)];
        if (n == 0 || c == 0) continue;
        std::vector<i64> ap(static_cast<std::size_t>(n) + 1);
        for (i64 j = 0; j <= n; ++j) ap[static_cast<std::size_t>(j)] = j * c;
        acc = sumset(acc, PointSet::of_1d(std::move(ap)), caps);
    }
    return acc;
}

PointSet iterated_image(const Gap& g, std::uint64_t ell, const Caps& caps) {
    if (ell == 0) throw ArgumentError("iterated_image: ell = 0");
    Gap scaled = scale(g, static_cast<i64>(ell), 1);
    scaled.offset = checked_mul(g.offset, static_cast<i64>(ell));
    return enumerate(scaled, caps);
}

bool is_t_proper(const Gap& g, const Rational& t, const Caps& caps) {
    validate(g);
    if (t <= 0) throw ArgumentError("is_t_proper: t must be positive");
    if (g.ambient_dim == 0) return true;
    // Injectivity on the t-scaled box anchored at the same corner:
    // sides floor(sides_i * t).
    std::vector<i64> scaled(g.sides.size());
    for (std::size_t i = 0; i < g.sides.size(); ++i) {
        Int m = (Int(g.sides[i]) * rational_num(t)) / rational_den(t);
        if (m > std::numeric_limits<i64>::max()) throw CapacityError("is_t_proper: scaled side overflows");
        scaled[i] = static_cast<i64>(m);
    }
    Int count = 1;
    for (i64 m : scaled) count *= Int(m) + 1;
    if (count > caps.max_enumeration) throw CapacityError("is_t_proper: scaled box above enumeration cap");

    // Collision scan over the scaled box.
    std::vector<i64> values;
    values.reserve(static_cast<std::size_t>(count));
    std::vector<i64> x(g.sides.size(), 0);
    for (;;) {
        i128 v = 0;
        for (std::size_t i = 0; i < x.size(); ++i) v += i128(x[i]) * g.coeffs[i];
        if (v < std::numeric_limits<i64>::min() || v > std::numeric_limits<i64>::max())
            throw CapacityError("is_t_proper: image value overflows");
        values.push_back(static_cast<i64>(v));
        std::size_t axis = x.size();
        while (axis > 0) {
            --axis;
            if (x[axis] < scaled[axis]) {
                ++x[axis];
                std::fill(x.begin() + static_cast<std::ptrdiff_t>(axis) + 1, x.end(), 0);
                break;
            }
            if (axis == 0) {
                axis = std::numeric_limits<std::size_t>::max();
                break;
            }
        }
        if (axis == std::numeric_limits<std::size_t>::max() || x.empty()) break;
    }
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

bool is_n_full(const Gap& g, std::int64_t n) {
    validate(g);
    for (i64 s : g.sides)
        if (s < n) return false;
    return true;
}

Gap scale(const Gap& g, std::int64_t num, std::int64_t den) {
    validate(g);
    if (num <= 0 || den <= 0) throw ArgumentError("scale: num and den must be positive");
    Gap out = g;
    for (i64& s : out.sides) {
        i128 scaled = (i128(s) * num) / den;
        if (scaled > std::numeric_limits<i64>::max()) throw CapacityError("scale: side overflows");
        s = static_cast<i64>(scaled);
    }
    return out;
}

bool is_separated(const PointSet& x, const Gap& g, const Caps& caps) {
    if (x.dim() != 1) throw DimensionError("is_separated: x must be one-dimensional");
    if (x.size() <= 1) return true;
    PointSet image = enumerate(g, caps);
    // Symmetrized image: membership of d tested as d or -d in the image.
    const auto& vals = x.flat();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        for (std::size_t j = i + 1; j < vals.size(); ++j) {
            i64 d = vals[j] - vals[i];
            i64 nd = -d;
            if (image.contains(std::span<const i64>(&d, 1)) ||
                image.contains(std::span<const i64>(&nd, 1)))
                return false;
        }
    }
    return true;
}

// --- gap hull ---------------------------------------------------------------
//
// Search family (used identically by the optimality oracle in the tests):
// canonical GAPs with strictly decreasing positive coefficients bounded by
// diam(b), box sizes with |P| <= diam(b) + 1, offset normalized to 0 and
// translate candidates drawn from b - P. Every cover of b by <= n translates
// of a 1-proper k-GAP is equivalent to one in this family up to per-axis
// reflections and offset shifts, which do not change |X + P|.

namespace {

struct HullCandidate {
    std::vector<i64> sides;   // effective axes only, every side >= 1
    std::vector<i64> coeffs;  // strictly decreasing, in [1, diam]
    std::vector<i64> image;   // sorted distinct values, min 0
};

/// Enumerates images of canonical candidates; returns empty when not 1-proper.
std::vector<i64> candidate_image(const std::vector<i64>& sides, const std::vector<i64>& coeffs) {
    std::vector<i64> values{0};
    for (std::size_t axis = 0; axis < sides.size(); ++axis) {
        std::vector<i64> next;
        next.reserve(values.size() * static_cast<std::size_t>(sides[axis] + 1));
        for (i64 j = 0; j <= sides[axis]; ++j)
            for (i64 v : values) next.push_back(v + j * coeffs[axis]);
        values = std::move(next);
    }
    std::size_t full = values.size();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() != full) return {};  // collision: not 1-proper
    return values;
}

/// All canonical (sides, coeffs) pairs for dimensions 1..k, ordered by
/// ascending |P| then lexicographic parameters.
std::vector<HullCandidate> enumerate_candidates(int k, i64 diam, u64 max_box) {
    std::vector<HullCandidate> out;
    std::vector<std::vector<std::vector<i64>>> side_tuples(static_cast<std::size_t>(k) + 1);
    // side tuples per dimension with product of (side+1) <= max_box
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<i64> cur(static_cast<std::size_t>(kk), 1);
        std::vector<std::vector<i64>>& bucket = side_tuples[static_cast<std::size_t>(kk)];
        // odometer over side vectors
        for (;;) {
            u64 prod = 1;
            bool ok = true;
            for (i64 s : cur) {
                prod *= static_cast<u64>(s) + 1;
                if (prod > max_box) {
                    ok = false;
                    break;
                }
            }
            if (ok) bucket.push_back(cur);
            int axis = kk - 1;
            while (axis >= 0) {
                ++cur[static_cast<std::size_t>(axis)];
                u64 p = 1;
                bool fits = true;
                for (i64 s : cur) {
                    p *= static_cast<u64>(s) + 1;
                    if (p > max_box) {
                        fits = false;
                        break;
                    }
                }
                if (fits) break;
                cur[static_cast<std::size_t>(axis)] = 1;
                --axis;
            }
            if (axis < 0) break;
        }
    }
    // coefficient tuples: strictly decreasing in [1, diam]
    std::vector<std::vector<std::vector<i64>>> coeff_tuples(static_cast<std::size_t>(k) + 1);
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<i64> idx(static_cast<std::size_t>(kk));
        // choose kk distinct values from [1, diam], emit descending
        std::vector<i64> comb(static_cast<std::size_t>(kk));
        for (int i = 0; i < kk; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
        if (diam < kk) continue;
        for (;;) {
            std::vector<i64> desc(comb.rbegin(), comb.rend());
            coeff_tuples[static_cast<std::size_t>(kk)].push_back(desc);
            int pos = kk - 1;
            while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == diam - (kk - 1 - pos)) --pos;
            if (pos < 0) break;
            ++comb[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < kk; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    for (int kk = 1; kk <= k; ++kk) {
        for (const auto& sides : side_tuples[static_cast<std::size_t>(kk)]) {
            for (const auto& coeffs : coeff_tuples[static_cast<std::size_t>(kk)]) {
                auto image = candidate_image(sides, coeffs);
                if (image.empty()) continue;
                out.push_back({sides, coeffs, std::move(image)});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const HullCandidate& a, const HullCandidate& b) {
        if (a.image.size() != b.image.size()) return a.image.size() < b.image.size();
        if (a.sides.size() != b.sides.size()) return a.sides.size() < b.sides.size();
        if (a.sides != b.sides) return a.sides < b.sides;
        return a.coeffs < b.coeffs;
    });
    return out;
}

std::vector<i64> merge_union(const std::vector<std::vector<i64>>& lists) {
    std::vector<i64> merged;
    for (const auto& l : lists) {
        std::vector<i64> next;
        next.reserve(merged.size() + l.size());
        std::set_union(merged.begin(), merged.end(), l.begin(), l.end(), std::back_inserter(next));
        merged = std::move(next);
    }
    return merged;
}

struct BestCover {
    u64 size = std::numeric_limits<u64>::max();
    std::vector<i64> sides, coeffs, xs;
    bool found = false;

    /// Lexicographic parameter tie-break on equal size.
    void offer(u64 sz, std::vector<i64> s, std::vector<i64> c, std::vector<i64> x) {
        std::sort(x.begin(), x.end());
        if (!found || sz < size) {
            size = sz;
            sides = std::move(s);
            coeffs = std::move(c);
            xs = std::move(x);
            found = true;
            return;
        }
        if (sz > size) return;
        auto key = std::tie(sides, coeffs, xs);
        auto cand = std::tie(s, c, x);
        if (cand < key) {
            sides = std::move(s);
            coeffs = std::move(c);
            xs = std::move(x);
        }
    }
};

/// Branch over translates covering the lowest uncovered element; complete
/// over X drawn from b - P with |X| <= n.
struct CoverSearch {
    const std::vector<i64>* b0 = nullptr;
    const HullCandidate* cand = nullptr;
    u64 n = 0;
    u64 node_budget = std::numeric_limits<u64>::max();
    u64 nodes = 0;
    bool budget_hit = false;

    std::vector<i64> xcand;
    std::vector<u64> masks;  // bitmask over b0 (|b0| <= 63 enforced by caps)
    BestCover* best = nullptr;

    void prepare() {
        std::map<i64, u64> by_x;
        for (i64 v : *b0)
            for (i64 p : cand->image) by_x[v - p] = 0;
        for (auto& [x, mask] : by_x) {
            u64 m = 0;
            for (std::size_t i = 0; i < b0->size(); ++i) {
                i64 want = (*b0)[i] - x;
                if (std::binary_search(cand->image.begin(), cand->image.end(), want)) m |= u64{1} << i;
            }
            mask = m;
        }
        xcand.clear();
        masks.clear();
        for (auto& [x, mask] : by_x) {
            xcand.push_back(x);
            masks.push_back(mask);
        }
    }

    void run() {
        std::vector<std::size_t> chosen;
        recurse(0, chosen);
    }

    void recurse(u64 covered, std::vector<std::size_t>& chosen) {
        if (++nodes > node_budget) {
            budget_hit = true;
            return;
        }
        const u64 full = (b0->size() == 64) ? ~u64{0} : ((u64{1} << b0->size()) - 1);
        if (covered == full) {
            std::vector<std::vector<i64>> translated(chosen.size());
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                translated[i].reserve(cand->image.size());
                for (i64 p : cand->image) translated[i].push_back(xcand[chosen[i]] + p);
            }
            auto u = merge_union(translated);
            std::vector<i64> xs(chosen.size());
            for (std::size_t i = 0; i < chosen.size(); ++i) xs[i] = xcand[chosen[i]];
            best->offer(u.size(), cand->sides, cand->coeffs, xs);
            return;
        }
        if (chosen.size() == n) return;
        // lowest uncovered element
        std::size_t e = 0;
        while (covered & (u64{1} << e)) ++e;
        for (std::size_t xi = 0; xi < xcand.size(); ++xi) {
            if (budget_hit) return;
            if (!(masks[xi] & (u64{1} << e))) continue;
            chosen.push_back(xi);
            recurse(covered | masks[xi], chosen);
            chosen.pop_back();
        }
    }
};

GapHullResult finish_result(const PointSet& b, int k, i64 t0, const BestCover& best, HullStatus status,
                            const Caps& caps) {
    Gap gap;
    gap.ambient_dim = k;
    gap.sides.assign(static_cast<std::size_t>(k), 0);
    gap.coeffs.assign(static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < best.sides.size(); ++i) {
        gap.sides[i] = best.sides[i];
        gap.coeffs[i] = best.coeffs[i];
    }
    gap.offset = 0;
    std::vector<i64> xs = best.xs;
    for (i64& x : xs) x = checked_add(x, t0);
    GapHullResult result;
    result.x_set = PointSet::of_1d(xs);
    result.gap = gap;
    result.total_size = best.size;
    result.status = status;

    // Hull validity is machine-checked on every return.
    PointSet image = enumerate(gap, caps);
    PointSet cover = sumset(result.x_set, image, caps);
    if (!b.is_subset_of(cover) || cover.size() != result.total_size || !is_t_proper(gap, 1, caps))
        throw std::logic_error("gap_hull: produced cover failed its validity check");
    return result;
}

}  // namespace

GapHullResult gap_hull(const PointSet& b, std::uint64_t n, int k, HullMode mode, const HullConfig& config,
                       const Caps& caps) {
    if (b.dim() != 1) throw DimensionError("gap_hull: b must be one-dimensional");
    if (b.empty()) throw EmptyInputError("gap_hull: empty b");
    if (n == 0) throw ArgumentError("gap_hull: n must be positive");
    if (k < 0) throw ArgumentError("gap_hull: negative k");

    const i64 t0 = b.value1d(0);
    std::vector<i64> b0 = b.values1d();
    for (i64& v : b0) v -= t0;
    const i64 diam = b0.back();

    if (k == 0) {
        if (b.size() > n)
            throw NoCoverError("gap_hull: k = 0 requires |b| <= n (hull size would be infinite)");
        BestCover best;
        best.offer(b.size(), {}, {}, b0);
        return finish_result(b, 0, t0, best,
                             mode == HullMode::exact ? HullStatus::exact_optimal
                                                     : HullStatus::certified_upper_bound,
                             caps);
    }

    if (mode == HullMode::exact) {
        if (b.size() > config.exact_max_points)
            throw CapacityError("gap_hull exact: |b| above configured cap");
        if (diam > config.exact_max_diameter)
            throw CapacityError("gap_hull exact: diameter above configured cap");
    }
    if (b0.size() > 63) throw CapacityError("gap_hull: more than 63 points unsupported");

    BestCover best;
    // Baselines: a single point per element (when n allows) and the step-1 AP.
    if (b.size() <= n) best.offer(b.size(), {0}, {1}, b0);
    {
        std::vector<i64> ap_sides{diam}, ap_coeffs{1};
        if (diam == 0) best.offer(1, {0}, {1}, {0});
        else best.offer(static_cast<u64>(diam) + 1, ap_sides, ap_coeffs, {0});
    }

    std::vector<HullCandidate> candidates;
    if (mode == HullMode::exact) {
        candidates = enumerate_candidates(k, std::max<i64>(diam, 1), static_cast<u64>(diam) + 1);
    } else {
        // Difference-guided: coefficients restricted to the most frequent
        // positive differences of b and their divisors.
        std::map<i64, u64> freq;
        for (std::size_t i = 0; i < b0.size(); ++i)
            for (std::size_t j = i + 1; j < b0.size(); ++j) ++freq[b0[j] - b0[i]];
        std::vector<std::pair<u64, i64>> ranked;
        for (auto& [d, c] : freq) {
            ranked.emplace_back(c, d);
            for (i64 q = 2; q * q <= d; ++q)
                if (d % q == 0) {
                    ranked.emplace_back(c, q);
                    ranked.emplace_back(c, d / q);
                }
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        std::vector<i64> steps;
        for (auto& [c, d] : ranked) {
            if (std::find(steps.begin(), steps.end(), d) == steps.end()) steps.push_back(d);
            if (steps.size() >= 16) break;
        }
        std::sort(steps.begin(), steps.end());
        u64 max_box = std::min<u64>(static_cast<u64>(diam) + 1, 4 * b0.size() + 4);
        // build candidates from the restricted step set
        for (int kk = 1; kk <= k && kk <= 2; ++kk) {
            if (kk == 1) {
                for (i64 c : steps) {
                    for (u64 len = 2; len <= max_box; ++len) {
                        std::vector<i64> sides{static_cast<i64>(len - 1)}, coeffs{c};
                        auto image = candidate_image(sides, coeffs);
                        if (!image.empty()) candidates.push_back({sides, coeffs, std::move(image)});
                    }
                }
            } else {
                for (std::size_t i = 0; i < steps.size(); ++i) {
                    for (std::size_t j = i + 1; j < steps.size(); ++j) {
                        i64 c2 = steps[i], c1 = steps[j];
                        for (i64 s1 = 1; s1 * 2 <= static_cast<i64>(max_box); ++s1) {
                            for (i64 s2 = 1; (s1 + 1) * (s2 + 1) <= static_cast<i64>(max_box); ++s2) {
                                std::vector<i64> sides{s1, s2}, coeffs{c1, c2};
                                auto image = candidate_image(sides, coeffs);
                                if (!image.empty()) candidates.push_back({sides, coeffs, std::move(image)});
                            }
                        }
                    }
                }
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const HullCandidate& a, const HullCandidate& b) {
                             return a.image.size() < b.image.size();
                         });
    }

    u64 node_budget = mode == HullMode::exact ? std::numeric_limits<u64>::max() : 200000;
    for (const auto& cand : candidates) {
        if (cand.image.size() >= best.size) break;  // candidates sorted by |P|
        CoverSearch search;
        search.b0 = &b0;
        search.cand = &cand;
        search.n = n;
        search.node_budget = node_budget;
        search.best = &best;
        search.prepare();
        search.run();
        if (search.budget_hit && mode == HullMode::heuristic) break;
    }

    if (!best.found) throw NoCoverError("gap_hull: no cover found in the search family");
    return finish_result(b, k, t0, best,
                         mode == HullMode::exact ? HullStatus::exact_optimal
                                                 : HullStatus::certified_upper_bound,
                         caps);
}

}  // namespace sumsetlab
