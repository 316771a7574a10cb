#include "sumsetlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sumsetlab/parallel.hpp"
#include "sumsetlab/rng.hpp"
#include "sumsetlab/roots.hpp"

namespace sumsetlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

std::string interval_string(const RationalInterval& iv) {
    return "[" + rational_to_string(iv.lo) + ", " + rational_to_string(iv.hi) + "]";
}

PointSet axis_interval(int k, i64 start, i64 count) {
    std::vector<i64> flat;
    flat.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(k));
    for (i64 i = 0; i < count; ++i) {
        flat.push_back(start + i);
        for (int c = 1; c < k; ++c) flat.push_back(0);
    }
    return PointSet::from_canonical(k, std::move(flat));
}

}  // namespace

TightnessResult tightness_example(int k, std::int64_t n, const Rational& t, std::int64_t m,
                                  const TightnessConfig& config, const Caps& caps) {
    if (k < 2) throw ArgumentError("tightness_example: k >= 2 required");
    if (n < 0 || m < 1) throw ArgumentError("tightness_example: bad n or m");
    if (t <= 0 || t > 1) throw ArgumentError("tightness_example: t must lie in (0, 1]");

    // |B| = m / t must be an integer.
    Int s_num = Int(m) * rational_den(t);
    if (s_num % rational_num(t) != 0) throw ArgumentError("tightness_example: m/t is not an integer");
    Int s_int = s_num / rational_num(t);
    if (s_int > caps.max_points) throw CapacityError("tightness_example: |B| above max_points");
    const i64 s = static_cast<i64>(s_int);

    // Configured ratio preconditions (m >> 1/t >> n >> k); zero disables one.
    if (config.min_m_times_t > 0 && Rational(m) * t < config.min_m_times_t)
        throw ArgumentError("tightness_example: m below configured minimum for this t");
    if (n > 0 && config.min_inv_t_per_n > 0 && Rational(1) / t < Rational(config.min_inv_t_per_n) * n)
        throw ArgumentError("tightness_example: t too large for this n");
    if (n > 0 && config.min_n_per_k > 0 && n < config.min_n_per_k * k)
        throw ArgumentError("tightness_example: n below configured multiple of k");

    PointSet a = axis_interval(k, 0, m);

    PointSet b(k);
    i64 u_expected = 0;
    if (n == 0) {
        b = axis_interval(k, 0, s);
        u_expected = m + s - 1;
    } else {
        const i64 interval_len = s - (k + n);
        if (interval_len < 2 * static_cast<i64>(k) + 2)
            throw ArgumentError("tightness_example: |B| too small for k + n extra points");
        std::vector<std::vector<i64>> rows;
        rows.reserve(static_cast<std::size_t>(s));
        for (i64 i = 0; i < interval_len; ++i) {
            std::vector<i64> row(static_cast<std::size_t>(k), 0);
            row[0] = i;
            rows.push_back(std::move(row));
        }
        // k points on the interval's line just beyond its end (each adds 2 to
        // the line of A+B), n points on distinct off-line levels (each adds a
        // full fresh translate of A).
        for (i64 j = 1; j <= k; ++j) {
            std::vector<i64> row(static_cast<std::size_t>(k), 0);
            row[0] = interval_len - 1 + 2 * j;
            rows.push_back(std::move(row));
        }
        // Moment-curve extras (zeta, zeta^2, ..., zeta^k): any k+1 of them are
        // affinely independent; the base grows until the whole extra family
        // passes the exact general-position check.
        for (i64 base = 5;; ++base) {
            if (base > 5 + 64) throw GenerationError("tightness_example: no general-position extras found");
            std::vector<std::vector<i64>> extras(rows.end() - k, rows.end());
            bool ok = true;
            std::vector<std::vector<i64>> moments;
            for (i64 j = 0; j < n; ++j) {
                i64 zeta = base + j;
                std::vector<i64> row(static_cast<std::size_t>(k));
                i64 power = zeta;
                for (int c = 0; c < k; ++c) {
                    row[static_cast<std::size_t>(c)] = power;
                    power = checked_mul(power, zeta);
                }
                moments.push_back(row);
                extras.push_back(std::move(row));
            }
            if (!in_general_position(PointSet::of(k, extras))) ok = false;
            if (ok) {
                for (auto& row : moments) rows.push_back(std::move(row));
                break;
            }
        }
        b = PointSet::of(k, rows);
        if (static_cast<i64>(b.size()) != s)
            throw std::logic_error("tightness_example: construction lost points");
        u_expected = (m + interval_len - 1 + 2 * k) + n * m;
    }

    const u64 u = sumset_size(a, b, caps);
    Rational denom = (Rational(1) + Rational(n) * t) * Rational(s);
    Rational ratio = Rational(u) / denom;

    InequalityReport rep;
    rep.name = "tightness-example";
    rep.add_hypothesis("k", Rational(k));
    rep.add_hypothesis("n", Rational(n));
    rep.add_hypothesis("t", t);
    rep.add_hypothesis("m", Rational(m));
    rep.add_hypothesis("|B|", Rational(s));
    rep.add_hypothesis("|A+B|", Rational(u));
    if (n > 0) {
        // Hypothesis certificate: within normal bound 2 the cover count is
        // exactly n + 1 by construction.
        CoverCertificate cover = cover_number(b, 2);
        rep.add_hypothesis("cover_count", Rational(cover.count));
        rep.add_cap("normal_bound", "2");
        if (cover.count <= static_cast<u64>(n)) rep.fail_hypothesis("cover count not above n");
    }
    if (u == static_cast<u64>(u_expected)) rep.add_detail("count_matches_closed_form", "true");
    else rep.add_detail("count_matches_closed_form", "false");
    rep.lhs = RationalInterval{ratio, ratio};
    rep.rhs = RationalInterval{1, 1};
    rep.slack = RationalInterval{ratio - 1, ratio - 1};
    rep.pass = ratio >= 1;
    rep.add_detail("measured_ratio", rational_to_string(ratio));
    if (n >= 1) {
        // same c_hat as verify_bm, without recomputing the sumset
        Rational prec(1, 1024);
        for (int round = 0; round < 64; ++round) {
            RationalInterval ru = bracket_nth_root(Rational(u), static_cast<unsigned>(k), prec);
            RationalInterval ra = bracket_nth_root(Rational(a.size()), static_cast<unsigned>(k), prec);
            RationalInterval rs = bracket_nth_root(Rational(s), static_cast<unsigned>(k), prec);
            Rational lo = ru.lo - ra.hi;
            if (lo < 0) lo = 0;
            RationalInterval chat{Rational(n) * (1 - (ru.hi - ra.lo) / rs.lo),
                                  Rational(n) * (1 - lo / rs.hi)};
            if (chat.width() <= Rational(1, 1000000)) {
                rep.add_detail("c_hat", interval_string(chat));
                rep.add_detail("c_hat_lo", rational_to_string(chat.lo));
                rep.add_detail("c_hat_hi", rational_to_string(chat.hi));
                break;
            }
            prec /= 1024;
        }
    }

    TightnessResult result;
    result.a = std::move(a);
    result.b = std::move(b);
    result.report = std::move(rep);
    result.measured_ratio = ratio;
    return result;
}

std::vector<SimplexTableRow> simplex_doubling_table(int k_max, std::int64_t n_max, const Caps& caps) {
    if (k_max < 1 || k_max > 4) throw UnsupportedDimensionError("simplex_doubling_table: k_max in [1,4]");
    if (n_max < 1) throw ArgumentError("simplex_doubling_table: n_max >= 1");
    std::vector<SimplexTableRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        for (i64 n = 1; n <= n_max; ++n) {
            Int expect = binomial(static_cast<u64>(2 * n + k), static_cast<u64>(k));
            if (expect > caps.max_points) throw CapacityError("simplex_doubling_table: cell above cap");
            PointSet s = simplex(k, n, caps);
            Int size = Int(s.size());
            if (size != binomial(static_cast<u64>(n + k), static_cast<u64>(k)))
                throw std::logic_error("simplex size != C(n+k, k)");
            Int doubled = Int(sumset_size(s, s, caps));
            // Cross-check the kernel against the binomial identity 2*S_n = S_2n.
            if (doubled != expect)
                throw std::logic_error("simplex doubling disagrees with the binomial identity");
            SimplexTableRow row;
            row.k = k;
            row.n = n;
            row.size = size;
            row.doubled_size = doubled;
            row.ratio = Rational(doubled, size);
            row.c_hat = Rational(n) * (1 - row.ratio / rational_pow(Rational(2), static_cast<unsigned>(k)));
            row.k_over_4 = Rational(k, 4);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

namespace {

Rational doubling_ratio(const PointSet& s, const Caps& caps) {
    return Rational(sumset_size(s, s, caps), s.size());
}

/// Next size-r index combination in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t universe) {
    std::size_t r = idx.size();
    std::size_t pos = r;
    while (pos-- > 0) {
        if (idx[pos] < universe - (r - pos)) {
            ++idx[pos];
            for (std::size_t j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

PointSet subset_from_indices(const std::vector<std::vector<i64>>& cells, const std::vector<std::size_t>& idx,
                             int k) {
    std::vector<i64> flat;
    flat.reserve(idx.size() * static_cast<std::size_t>(k));
    for (std::size_t i : idx) flat.insert(flat.end(), cells[i].begin(), cells[i].end());
    return PointSet::from_canonical(k, std::move(flat));
}

bool feasible(const PointSet& s, i64 n, i64 normal_bound, CoverCertificate* cert_out) {
    CoverCertificate cert = cover_number(s, normal_bound);
    if (cert_out) *cert_out = cert;
    return cert.count > static_cast<u64>(n);
}

}  // namespace

FrontierRecord extremal_search(int k, std::int64_t n, std::uint64_t size, SearchStrategy strategy,
                               const SearchOptions& opt, const Caps& caps) {
    if (size == 0) throw ArgumentError("extremal_search: size >= 1 required");
    FrontierRecord rec;
    rec.k = k;
    rec.n = n;
    rec.size = size;
    rec.seed = opt.seed;
    rec.budget = opt.budget;
    rec.strategy = strategy;

    if (strategy == SearchStrategy::exhaustive) {
        if (k != 2 || size > 9) throw ArgumentError("extremal_search: exhaustive mode is k=2, size <= 9");
        const i64 g = opt.grid_max;
        std::vector<std::vector<i64>> cells;
        for (i64 x = 0; x <= g; ++x)
            for (i64 y = 0; y <= g; ++y) cells.push_back({x, y});
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        bool found = false;
        Rational best_ratio;
        PointSet best_set(k);
        CoverCertificate best_cert;
        do {
            PointSet s = subset_from_indices(cells, idx, k);
            Rational ratio = doubling_ratio(s, caps);
            if (found && ratio >= best_ratio) continue;  // strict improvement keeps the lex-least winner
            CoverCertificate cert;
            if (!feasible(s, n, opt.normal_bound, &cert)) continue;
            found = true;
            best_ratio = ratio;
            best_set = s;
            best_cert = cert;
        } while (next_combination(idx, cells.size()));
        if (!found)
            throw InfeasibleError("extremal_search: no set of this size avoids n parallel hyperplanes");
        rec.family = "exhaustive-grid";
        rec.points = best_set;
        rec.doubling = best_ratio;
        rec.cover = best_cert;
        return rec;
    }

    // Local search: single-point relocation inside the bounding cube expanded
    // by 1, first-improvement, restarts from simplex, box-slice and random
    // feasible seeds.
    if (k < 2 || k > 4) throw UnsupportedDimensionError("extremal_search: local mode needs k in [2,4]");
    u64 budget = opt.budget;
    bool found = false;
    Rational best_ratio;
    PointSet best_set(k);
    std::string best_family;

    auto truncate_to_size = [&](const PointSet& s) {
        std::vector<i64> flat(s.flat().begin(),
                              s.flat().begin() + static_cast<std::ptrdiff_t>(size * static_cast<u64>(k)));
        return PointSet::from_canonical(k, std::move(flat));
    };

    std::vector<std::pair<std::string, PointSet>> seeds;
    for (i64 mtry = 1; mtry <= 12; ++mtry) {
        if (binomial(static_cast<u64>(mtry + k), static_cast<u64>(k)) >= size) {
            PointSet sx = simplex(k, mtry, caps);
            if (sx.size() >= size) seeds.emplace_back("local:simplex", truncate_to_size(sx));
            break;
        }
    }
    {
        i64 side = 1;
        while (std::pow(static_cast<double>(side + 1), k) < static_cast<double>(size)) ++side;
        Box box{k, std::vector<i64>(static_cast<std::size_t>(k), side)};
        PointSet bx = box.enumerate(caps);
        if (bx.size() >= size) seeds.emplace_back("local:box-slice", truncate_to_size(bx));
    }
    for (int rseed = 0; rseed < 3; ++rseed) {
        Rng rng(opt.seed * 1000003 + static_cast<u64>(rseed));
        i64 side = std::max<i64>(3, static_cast<i64>(std::ceil(std::pow(static_cast<double>(size), 1.0 / k))) +
                                        n + 1);
        for (int attempt = 0; attempt < 50; ++attempt) {
            std::vector<std::vector<i64>> pts;
            for (u64 i = 0; i < size; ++i) {
                std::vector<i64> p(static_cast<std::size_t>(k));
                for (auto& c : p) c = rng.uniform(0, side);
                pts.push_back(std::move(p));
            }
            PointSet s = PointSet::of(k, pts);
            if (s.size() != size) continue;
            seeds.emplace_back("local:random-" + std::to_string(rseed), s);
            break;
        }
    }

    for (auto& [family, seed_set] : seeds) {
        if (seed_set.size() != size) continue;
        if (!feasible(seed_set, n, opt.normal_bound, nullptr)) continue;
        PointSet current = seed_set;
        Rational current_ratio = doubling_ratio(current, caps);
        bool improved = true;
        while (improved && budget > 0) {
            improved = false;
            // bounding cube +- 1
            std::vector<std::pair<i64, i64>> ranges;
            for (int axis = 1; axis <= k; ++axis) {
                auto [lo, hi] = current.coord_range(axis);
                ranges.emplace_back(lo - 1, hi + 1);
            }
            for (std::size_t i = 0; i < current.size() && !improved && budget > 0; ++i) {
                std::vector<std::vector<i64>> rows;
                for (std::size_t j = 0; j < current.size(); ++j)
                    if (j != i) {
                        auto p = current.point(j);
                        rows.emplace_back(p.begin(), p.end());
                    }
                // odometer over the expanded cube
                std::vector<i64> probe(static_cast<std::size_t>(k));
                for (int axis = 0; axis < k; ++axis) probe[static_cast<std::size_t>(axis)] = ranges[static_cast<std::size_t>(axis)].first;
                for (;;) {
                    std::vector<std::vector<i64>> cand_rows = rows;
                    cand_rows.push_back(probe);
                    PointSet cand = PointSet::of(k, cand_rows);
                    if (cand.size() == size && budget > 0) {
                        --budget;
                        Rational r = doubling_ratio(cand, caps);
                        if (r < current_ratio && feasible(cand, n, opt.normal_bound, nullptr)) {
                            current = cand;
                            current_ratio = r;
                            improved = true;
                            break;
                        }
                    }
                    int axis = k;
                    bool done = true;
                    while (axis-- > 0) {
                        auto ax = static_cast<std::size_t>(axis);
                        if (probe[ax] < ranges[ax].second) {
                            ++probe[ax];
                            for (int j = axis + 1; j < k; ++j)
                                probe[static_cast<std::size_t>(j)] = ranges[static_cast<std::size_t>(j)].first;
                            done = false;
                            break;
                        }
                    }
                    if (done || budget == 0) break;
                }
            }
        }
        if (!found || current_ratio < best_ratio) {
            found = true;
            best_ratio = current_ratio;
            best_set = current;
            best_family = family;
        }
    }
    if (!found) throw InfeasibleError("extremal_search: no feasible seed at this size");
    CoverCertificate cert;
    feasible(best_set, n, opt.normal_bound, &cert);
    rec.family = best_family;
    rec.points = best_set;
    rec.doubling = best_ratio;
    rec.cover = cert;
    return rec;
}

void verify_frontier_record(const FrontierRecord& rec, const Caps& caps) {
    if (rec.points.size() != rec.size) throw ArgumentError("frontier record: size mismatch");
    Rational ratio = doubling_ratio(rec.points, caps);
    if (ratio != rec.doubling) throw ArgumentError("frontier record: doubling ratio fails re-verification");
    if (!certificate_covers(rec.cover, rec.points))
        throw ArgumentError("frontier record: cover certificate unsound");
    CoverCertificate fresh = cover_number(rec.points, rec.cover.normal_bound);
    if (fresh.count != rec.cover.count)
        throw ArgumentError("frontier record: cover count fails re-verification");
    if (fresh.count <= static_cast<u64>(rec.n))
        throw ArgumentError("frontier record: cover constraint violated");
}

std::vector<EstimationRow> constant_estimation(const ExperimentGrid& grid, const Caps& caps) {
    if (grid.ks.empty() || grid.ns.empty() || grid.ts.empty())
        throw ArgumentError("constant_estimation: empty grid range");
    struct Cell {
        int k;
        i64 n;
        Rational t;
        u64 seed;
    };
    std::vector<Cell> cells;
    u64 cell_index = 0;
    for (int k : grid.ks)
        for (i64 n : grid.ns)
            for (const Rational& t : grid.ts) cells.push_back({k, n, t, grid.seed + cell_index++});

    std::vector<EstimationRow> rows(cells.size());
    parallel_for_index(cells.size(), grid.threads, [&](std::size_t ci) {
        const Cell& cell = cells[ci];
        EstimationRow row;
        row.k = cell.k;
        row.n = cell.n;
        row.t = cell.t;
        row.family = grid.family;
        row.seed = cell.seed;

        PointSet a(cell.k), b(cell.k);
        double tval = static_cast<double>(rational_num(cell.t).convert_to<double>()) /
                      rational_den(cell.t).convert_to<double>();
        if (grid.family == "box") {
            i64 mb = std::max<i64>(cell.n, 8);
            i64 ma = std::max<i64>(0, static_cast<i64>(std::llround((mb + 1) * std::pow(tval, 1.0 / cell.k))) - 1);
            Box bb{cell.k, std::vector<i64>(static_cast<std::size_t>(cell.k), mb)};
            Box ba{cell.k, std::vector<i64>(static_cast<std::size_t>(cell.k), ma)};
            b = bb.enumerate(caps);
            a = ba.enumerate(caps);
        } else if (grid.family == "simplex" || grid.family == "cone") {
            auto make = grid.family == "simplex" ? simplex : cone;
            i64 mb = std::max<i64>(cell.n, 6);
            i64 ma = std::max<i64>(1, static_cast<i64>(std::llround((mb)*std::pow(tval, 1.0 / cell.k))));
            b = make(cell.k, mb, caps);
            a = make(cell.k, ma, caps);
        } else if (grid.family == "interval-plus-points") {
            // m chosen as the smallest multiple of num(t) at least 100/t
            Int num = rational_num(cell.t), den = rational_den(cell.t);
            Int m = (Int(100) * den + num - 1) / num;
            while (m % num != 0) ++m;
            TightnessConfig config;
            config.min_n_per_k = 0;  // grid cells probe below the 4k default
            config.min_inv_t_per_n = 0;
            TightnessResult tr =
                tightness_example(cell.k, cell.n, cell.t, static_cast<i64>(m), config, caps);
            a = std::move(tr.a);
            b = std::move(tr.b);
        } else if (grid.family == "random-dense") {
            Rng rng(cell.seed);
            i64 mb = std::max<i64>(cell.n + 2, 7);
            i64 ma = std::max<i64>(1, static_cast<i64>(std::llround((mb + 1) * std::pow(tval, 1.0 / cell.k))) - 1);
            for (int attempt = 0; attempt < 50; ++attempt) {
                std::vector<std::vector<i64>> pts;
                Box bb{cell.k, std::vector<i64>(static_cast<std::size_t>(cell.k), mb)};
                PointSet full = bb.enumerate(caps);
                for (std::size_t i = 0; i < full.size(); ++i)
                    if (rng.chance(0.6)) {
                        auto p = full.point(i);
                        pts.emplace_back(p.begin(), p.end());
                    }
                if (pts.size() < 2) continue;
                b = PointSet::of(cell.k, pts);
                if (cover_number(b, 0).count > static_cast<u64>(cell.n)) break;
            }
            std::vector<std::vector<i64>> pts;
            Box ba{cell.k, std::vector<i64>(static_cast<std::size_t>(cell.k), ma)};
            PointSet full = ba.enumerate(caps);
            for (std::size_t i = 0; i < full.size(); ++i)
                if (rng.chance(0.8) || pts.empty()) {
                    auto p = full.point(i);
                    pts.emplace_back(p.begin(), p.end());
                }
            a = PointSet::of(cell.k, pts);
        } else {
            throw ArgumentError("constant_estimation: unknown family '" + grid.family + "'");
        }

        BmOptions opt;
        InequalityReport rep = verify_bm(a, b, static_cast<u64>(cell.n), Rational(1, 2), opt, caps);
        row.size_a = a.size();
        row.size_b = b.size();
        row.hypothesis_ok = rep.hypotheses_ok;
        for (const auto& [key, value] : rep.hypothesis_values) {
            if (key == "|A+B|") row.sumset = static_cast<u64>(rational_num(value));
            if (key == "cover_count") row.cover_count = static_cast<u64>(rational_num(value));
        }
        for (const auto& [key, value] : rep.caps_used)
            if (key == "normal_bound") row.normal_bound = std::stoll(value);
        Rational lo, hi;
        for (const auto& [key, value] : rep.details) {
            if (key == "c_hat_lo") lo = rational_from_string(value);
            if (key == "c_hat_hi") hi = rational_from_string(value);
        }
        row.c_hat = {lo, hi};
        rows[ci] = std::move(row);
    });
    return rows;
}

}  // namespace sumsetlab
