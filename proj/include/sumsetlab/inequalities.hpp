#pragma once

#include <cstdint>
#include <map>

#include "sumsetlab/gap.hpp"
#include "sumsetlab/point_set.hpp"
#include "sumsetlab/report.hpp"

namespace sumsetlab {

/// Finitely supported function Z -> Q>=0.
using WeightedFunction = std::map<std::int64_t, Rational>;

struct BmOptions {
    std::int64_t normal_bound = 0;  // 0 = default bound (2 * diameter of b)
    unsigned threads = 0;
    Rational chat_precision = Rational(1, 1000000);
};

/// |A+B|^(1/k) >= |A|^(1/k) + (1 - epsilon)|B|^(1/k), hypothesis "b not
/// covered by n parallel hyperplanes" checked within the declared normal
/// family and reported (not thrown). Also reports the empirical constant
/// c_hat = n * (1 - (|A+B|^(1/k) - |A|^(1/k)) / |B|^(1/k)) as a rational
/// interval.
InequalityReport verify_bm(const PointSet& a, const PointSet& b, std::uint64_t n, const Rational& epsilon,
                           const BmOptions& opt = {}, const Caps& caps = default_caps());

/// Iterated-sumset bound: |h*A| >= |h*A'| >= h*l - l^2/(|A|-2) where
/// A' = {0..|A|-2} union {l}. Requires A in {0..l}, 0 and l in A,
/// gcd(A) = 1, |A| >= 3.
InequalityReport verify_lev(const PointSet& a, std::uint64_t h, const Caps& caps = default_caps());

/// AP containment r*[-2ml', 2ml'] inside 20m * A for symmetric A; hypotheses
/// per statement, r = gcd(A), l' = l / r.
InequalityReport verify_ap_containment(const PointSet& a, std::int64_t m, const Caps& caps = default_caps());

/// Box shrinking: if P is 40*m*l-proper and l*B is covered by X + l*P with
/// |X| <= m, then X + 20m*m! * (P/m!) contains a translate of B. Reports the
/// witnessing translate.
InequalityReport verify_box_shrinking(const Gap& p, const PointSet& x, const PointSet& b, std::uint64_t ell,
                                      std::uint64_t m, const Caps& caps = default_caps());

/// Dense-sets-in-boxes bound |Y+Z|^(1/d) >= (|Y| - d n^-1 |P|)_+^(1/d)
/// + |Z|^(1/d) for Y inside P, Z inside the ell-scaled box, P n-full and
/// (ell+1)-proper.
InequalityReport verify_bm_in_boxes(const PointSet& y, const PointSet& z, const Gap& p, std::uint64_t ell,
                                    std::int64_t n, const Caps& caps = default_caps());

/// Superadditivity of d-th roots of counting sums: if h(x+y)^(1/d) >=
/// f(x)^(1/d) + g(y)^(1/d) on supports then Sigma(h)^(1/d) >=
/// Sigma(f)^(1/d) + Sigma(g)^(1/d). When f or g has support >= 2 the
/// strict-gain ratio is reported as an empirical probe.
InequalityReport verify_superadditivity(const WeightedFunction& f, const WeightedFunction& g,
                                        const WeightedFunction& h, unsigned d);

/// Petridis' sharpening of Pluennecke: with K = min over nonempty subsets
/// a' of |a'+b|/|a'|, the set attaining K satisfies |a* + l*b| <= K^l |a*|.
/// When a itself attains K the check applies to a directly; otherwise the
/// assertion is made on the lex-least minimizer and the unrestricted
/// comparison is recorded unasserted. Exact K requires |a| <= 15.
InequalityReport verify_plunnecke(const PointSet& a, const PointSet& b, std::uint64_t ell,
                                  const Caps& caps = default_caps());

/// Whether a and b each fit in a single translate of the image of p;
/// reports |P|/|A| alongside (no pass threshold for it).
InequalityReport verify_stability_containment(const PointSet& a, const PointSet& b, const Gap& p,
                                              const Caps& caps = default_caps());

}  // namespace sumsetlab
