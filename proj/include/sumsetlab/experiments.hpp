#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumsetlab/geometry.hpp"
#include "sumsetlab/inequalities.hpp"
#include "sumsetlab/point_set.hpp"

namespace sumsetlab {

/// Ratio preconditions for the interval-plus-points construction. The
/// defaults encode m >= 100/t, t <= 1/(10n), n >= 4k; suites that probe the
/// asymptotic regime relax them explicitly.
struct TightnessConfig {
    std::int64_t min_m_times_t = 100;  // require m >= min_m_times_t / t
    std::int64_t min_inv_t_per_n = 10;  // require 1/t >= min_inv_t_per_n * n
    std::int64_t min_n_per_k = 4;       // require n >= min_n_per_k * k
};

struct TightnessResult {
    PointSet a;
    PointSet b;
    InequalityReport report;  // includes |A+B| / ((1+nt)|B|) and c_hat
    Rational measured_ratio{0};
};

/// The interval-plus-points construction: A is an interval of m points on the
/// first axis; B is an interval (|B| = m/t) together with k+n extra points in
/// general position, k of them just beyond the interval on its own line and n
/// on distinct off-line levels, so the off-line points each contribute a full
/// fresh line to A+B.
TightnessResult tightness_example(int k, std::int64_t n, const Rational& t, std::int64_t m,
                                  const TightnessConfig& config = {}, const Caps& caps = default_caps());

struct SimplexTableRow {
    int k = 0;
    std::int64_t n = 0;
    Int size;          // |S_n| = C(n+k, k)
    Int doubled_size;  // |S_n + S_n| = C(2n+k, k)
    Rational ratio;    // doubled / size
    Rational c_hat;    // n * (1 - ratio / 2^k)
    Rational k_over_4;
};

/// Doubling table for discrete simplices; the sumset is computed by the
/// kernel and cross-checked against the binomial identity 2*S_n = S_2n.
std::vector<SimplexTableRow> simplex_doubling_table(int k_max, std::int64_t n_max,
                                                    const Caps& caps = default_caps());

enum class SearchStrategy { exhaustive, local };

/// Best-found set of a given size whose bounded-family cover number exceeds
/// n, minimizing the doubling ratio |A+A|/|A|.
struct FrontierRecord {
    int k = 0;
    std::int64_t n = 0;
    std::uint64_t size = 0;
    std::string family;  // construction or search provenance
    PointSet points;
    Rational doubling;
    CoverCertificate cover;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    SearchStrategy strategy = SearchStrategy::exhaustive;
};

struct SearchOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = 20000;     // move evaluations (local strategy)
    std::int64_t grid_max = 4;        // exhaustive strategy: coordinates in [0, grid_max]
    std::int64_t normal_bound = 0;    // 0 = default per set
    unsigned threads = 0;
};

FrontierRecord extremal_search(int k, std::int64_t n, std::uint64_t size, SearchStrategy strategy,
                               const SearchOptions& opt = {}, const Caps& caps = default_caps());

/// Re-verifies doubling ratio and cover certificate from scratch; throws
/// ArgumentError on any mismatch with the persisted values.
void verify_frontier_record(const FrontierRecord& rec, const Caps& caps = default_caps());

struct ExperimentGrid {
    std::vector<int> ks;
    std::vector<std::int64_t> ns;
    std::vector<Rational> ts;
    std::string family;  // box | simplex | cone | interval-plus-points | random-dense
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

struct EstimationRow {
    int k = 0;
    std::int64_t n = 0;
    Rational t{0};
    std::string family;
    std::uint64_t seed = 0;
    std::uint64_t size_a = 0;
    std::uint64_t size_b = 0;
    std::uint64_t sumset = 0;
    std::uint64_t cover_count = 0;
    std::int64_t normal_bound = 0;
    bool hypothesis_ok = false;
    RationalInterval c_hat{0, 0};
};

/// Runs verify_bm over the grid's family instances and reports one row per
/// cell (max observed c_hat aggregation is left to the CSV consumer; every
/// parameter is echoed per row).
std::vector<EstimationRow> constant_estimation(const ExperimentGrid& grid, const Caps& caps = default_caps());

}  // namespace sumsetlab
