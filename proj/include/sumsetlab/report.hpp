#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sumsetlab/numeric.hpp"
#include "sumsetlab/roots.hpp"

namespace sumsetlab {

/// Structured outcome of one verifier run. lhs/rhs/slack are rational
/// enclosures; for purely rational comparisons lo == hi. The pass verdict is
/// always decided exactly, never read off the enclosures.
struct InequalityReport {
    std::string name;

    std::vector<std::pair<std::string, Rational>> hypothesis_values;
    bool hypotheses_ok = true;
    std::vector<std::string> hypothesis_failures;

    RationalInterval lhs{0, 0};
    RationalInterval rhs{0, 0};
    RationalInterval slack{0, 0};
    bool pass = false;
    /// False when the verdict is recorded but not guaranteed by the statement
    /// (e.g. unminimized K); suites and the CLI only treat asserted failures
    /// as failures.
    bool asserted = true;

    std::vector<std::pair<std::string, std::string>> caps_used;
    std::vector<std::pair<std::string, std::string>> details;

    void add_hypothesis(const std::string& label, const Rational& v) {
        hypothesis_values.emplace_back(label, v);
    }
    void fail_hypothesis(const std::string& label) {
        hypotheses_ok = false;
        hypothesis_failures.push_back(label);
    }
    void add_cap(const std::string& k, const std::string& v) { caps_used.emplace_back(k, v); }
    void add_detail(const std::string& k, const std::string& v) { details.emplace_back(k, v); }
};

}  // namespace sumsetlab
