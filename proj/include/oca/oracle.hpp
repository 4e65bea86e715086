#ifndef OCA_ORACLE_HPP
#define OCA_ORACLE_HPP

#include <optional>
#include <vector>

#include "oca/covering_code.hpp"
#include "oca/nrt.hpp"

namespace oca {

struct ExactCoverResult {
    bool found = false;        // a covering of size <= cap exists
    int value = 0;             // exact minimum if found, else cap searched
    std::optional<CoveringCode> witness;
};

// Exhaustive minimum-size covering search over Z_q^{ms}; the space must
// fit in one 64-bit ball mask (q^{ms} <= 64) and cap <= 7. The first
// center is fixed to the zero word (translation invariance).
ExactCoverResult exact_min_covering(int q, int m, int s, int R, int cap);

// Max-coverage greedy baseline (ties -> lexicographically least center);
// deterministic, the seed is accepted for interface uniformity only.
// Requires q^{ms} <= 2^20.
CoveringCode greedy_covering(int q, int m, int s, int R, unsigned seed = 0);

struct IdealCensus {
    std::vector<std::vector<int>> ideals;  // height vectors, lex order
    // histogram[i][j] = #ideals with cardinality i and j maximal elements
    std::vector<std::vector<long long>> histogram;
};

// Enumerates all (s+1)^m ideals of [m.s]; requires m*s <= 12.
IdealCensus brute_ideals(const NrtPoset& poset);

}  // namespace oca

#endif
