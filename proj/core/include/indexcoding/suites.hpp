#pragma once

#include <random>
#include <string>
#include <vector>

#include "indexcoding/digraph.hpp"

namespace indexcoding {

struct SuiteCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool passed;
    std::vector<SuiteCheck> checks;
};

/// Known suite names: thm1, cycle5, fig5, thm5, census, additivity, conjecture1.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);

/// Uniform digraph on n vertices, each ordered pair present with probability
/// percent/100. Deterministic for a given generator state.
DiGraph random_digraph(std::mt19937& rng, int n, int percent);

/// Exact one-shot size of the 32-tuple binary confusion graph of the
/// bidirectional 5-cycle. Computed once by the exact coloring engine and kept
/// as a regression constant; the proved lower bound is 7.
inline constexpr int kCycle5OneShotSize = 8;

}  // namespace indexcoding
