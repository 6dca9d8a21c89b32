#pragma once

#include <span>
#include <string>
#include <vector>

namespace steiner {

/// One failed case of one check: the canonical tree it happened on, the
/// subset size, and what was observed against what was required.
struct Violation {
    int n = 0;
    int k = 0;
    std::vector<int> level_sequence;
    std::string params;
    std::string observed;
    std::string bound;
};

/// For the ratio checks: the enumerated extremal tree per (n, k) and its
/// exact value. For the concavity check: the first equality witness.
struct TightnessWitness {
    int n = 0;
    int k = 0;
    std::vector<int> level_sequence;
    std::string value;
};

struct CheckResult {
    std::string name;
    long trees_examined = 0;
    long cases_checked = 0;
    long cases_skipped = 0;  // excluded by a theorem's k- or n-precondition
    std::vector<Violation> violations;
    std::vector<TightnessWitness> tightness;
    double elapsed_seconds = 0.0;  // diagnostic; not part of serialized reports
};

struct VerificationReport {
    int n_max = 0;
    std::vector<int> ks;  // empty = every k in [2, n] per tree
    std::vector<CheckResult> checks;

    bool ok() const;
    long total_violations() const;
};

const std::vector<std::string>& all_check_names();

/// Runs the selected checks over every free tree of every order 2..n_max.
/// Checks run in the order of all_check_names(); trees in canonical
/// enumeration order; output is deterministic.
VerificationReport verify(int n_max, std::span<const std::string> checks,
                          std::span<const int> ks = {});

}  // namespace steiner
