#include "sumsetlab/transforms.hpp"

#include <algorithm>
#include <map>

#include "sumsetlab/roots.hpp"

namespace sumsetlab {

namespace {

using i64 = std::int64_t;

/// Translate so the bounding box has min corner 0. Compression is only
/// translation-covariant once the anchor is pinned.
PointSet normalize_corner(const PointSet& a) {
    std::vector<i64> shift(static_cast<std::size_t>(a.dim()));
    for (int axis = 1; axis <= a.dim(); ++axis)
        shift[static_cast<std::size_t>(axis - 1)] = -a.coord_range(axis).first;
    return translate(a, shift);
}

}  // namespace

PointSet compress(const PointSet& a, int axis) {
    if (a.empty()) throw EmptyInputError("compress: empty set");
    if (axis < 1 || axis > a.dim()) throw ArgumentError("compress: axis out of range");
    PointSet s = normalize_corner(a);
    const std::size_t k = static_cast<std::size_t>(s.dim());
    const std::size_t ax = static_cast<std::size_t>(axis - 1);
    // Count points per line parallel to e_axis, then stack each line onto
    // positions 0..count-1.
    std::map<std::vector<i64>, i64> next_slot;
    std::vector<i64> flat;
    flat.reserve(s.flat().size());
    std::vector<i64> key(k - 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s.point(i);
        std::size_t j = 0;
        for (std::size_t c = 0; c < k; ++c)
            if (c != ax) key[j++] = p[c];
        i64 slot = next_slot[key]++;
        std::vector<i64> row(p.begin(), p.end());
        row[ax] = slot;
        flat.insert(flat.end(), row.begin(), row.end());
    }
    PointSet out(1);
    {
        std::vector<std::vector<i64>> rows;
        rows.reserve(flat.size() / k);
        for (std::size_t i = 0; i + k <= flat.size(); i += k)
            rows.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(i),
                              flat.begin() + static_cast<std::ptrdiff_t>(i + k));
        out = PointSet::of(s.dim(), rows);
    }
    if (out.size() != a.size()) throw std::logic_error("compress: cardinality changed");
    return out;
}

PointSet compress_fully(const PointSet& a) {
    if (a.empty()) throw EmptyInputError("compress_fully: empty set");
    PointSet current = a;
    for (int round = 0; round < 64; ++round) {
        PointSet next = current;
        for (int axis = 1; axis <= a.dim(); ++axis) next = compress(next, axis);
        if (next == current) return next;
        current = next;
    }
    throw std::logic_error("compress_fully: no fixpoint after 64 rounds");
}

InequalityReport cube_summand_identity_check(const PointSet& a, const PointSet& b, const Caps& caps) {
    if (a.dim() != b.dim()) throw DimensionError("cube_summand: dimension mismatch");
    if (a.empty() || b.empty()) throw EmptyInputError("cube_summand: empty input");
    const int d = a.dim();
    if (d > 3) throw UnsupportedDimensionError("cube_summand: dim above 3");

    Box cube{d, std::vector<i64>(static_cast<std::size_t>(d), 1)};
    PointSet ab = sumset(a, b, caps);
    PointSet padded = sumset(ab, cube.enumerate(caps), caps);

    InequalityReport rep;
    rep.name = "cube-summand";
    rep.add_hypothesis("|A|", Rational(a.size()));
    rep.add_hypothesis("|B|", Rational(b.size()));
    rep.add_hypothesis("|A+B+cube|", Rational(padded.size()));

    const unsigned du = static_cast<unsigned>(d);
    int sign = compare_root_vs_root_sum(Rational(padded.size()), Rational(a.size()), 1, Rational(b.size()), du);
    rep.pass = sign >= 0;
    Rational prec(1, 1000000);
    rep.lhs = bracket_nth_root(Rational(padded.size()), du, prec);
    std::vector<RadicalTerm> rhs_terms{{1, Rational(a.size()), du}, {1, Rational(b.size()), du}};
    rep.rhs = bracket_radical_sum(rhs_terms, prec);
    std::vector<RadicalTerm> slack_terms{{1, Rational(padded.size()), du},
                                         {-1, Rational(a.size()), du},
                                         {-1, Rational(b.size()), du}};
    rep.slack = bracket_radical_sum(slack_terms, prec);
    rep.add_detail("comparison", "|A+B+{0,1}^d|^(1/d) >= |A|^(1/d) + |B|^(1/d)");
    return rep;
}

PointSet ruzsa_cover(const PointSet& a, const PointSet& b, const Caps& caps) {
    if (a.dim() != b.dim()) throw DimensionError("ruzsa_cover: dimension mismatch");
    if (a.empty() || b.empty()) throw EmptyInputError("ruzsa_cover: empty input");

    // Greedy maximal family of pairwise disjoint translates x + b, x in a,
    // scanned in canonical order.
    std::vector<PointSet> translates;
    std::vector<std::vector<i64>> chosen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto p = a.point(i);
        PointSet cand = translate(b, p);
        bool disjoint = true;
        for (const PointSet& t : translates) {
            // sorted row intersection test
            std::size_t x = 0, y = 0;
            while (x < cand.size() && y < t.size()) {
                auto px = cand.point(x);
                auto py = t.point(y);
                if (std::lexicographical_compare(px.begin(), px.end(), py.begin(), py.end()))
                    ++x;
                else if (std::lexicographical_compare(py.begin(), py.end(), px.begin(), px.end()))
                    ++y;
                else {
                    disjoint = false;
                    break;
                }
            }
            if (!disjoint) break;
        }
        if (disjoint) {
            translates.push_back(std::move(cand));
            chosen.emplace_back(p.begin(), p.end());
        }
    }
    PointSet x_set = PointSet::of(a.dim(), chosen);

    // Soundness is machine-checked on every call: a inside X + b - b and
    // |X| * |b| <= |a+b|.
    PointSet cover = sumset(x_set, difference_set(b, b, caps), caps);
    if (!a.is_subset_of(cover)) throw std::logic_error("ruzsa_cover: cover property failed");
    if (Int(x_set.size()) * Int(b.size()) > Int(sumset_size(a, b, caps)))
        throw std::logic_error("ruzsa_cover: cardinality bound failed");
    return x_set;
}

}  // namespace sumsetlab
