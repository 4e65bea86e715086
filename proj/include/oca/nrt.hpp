#ifndef OCA_NRT_HPP
#define OCA_NRT_HPP

#include <cstdint>
#include <vector>

namespace oca {

using Word = std::vector<uint8_t>;

// Disjoint union of m chains of length s on ground set {1,...,ms}.
// Block i (0-based) is {is+1,...,(i+1)s}; is+1 is minimal, (i+1)s maximal.
// Column c in block i has height c - is (1 = bottom, s = top).
struct NrtPoset {
    int m;
    int s;

    NrtPoset(int m_, int s_);

    int size() const { return m * s; }

    bool operator==(const NrtPoset&) const = default;
};

// Complement of an ideal: the top j_i elements of each chain.
struct AntiIdeal {
    std::vector<int> counts;  // one per block, each in [0, s]

    int size() const;
};

// Ball-volume data for one (q, m, s, R) tuple.
struct SphereProfile {
    int q, m, s, R;
    // omega[i][j] = number of ideals of cardinality i with exactly j
    // maximal elements, 1 <= i <= ms, 1 <= j <= min(m, i).
    std::vector<std::vector<long long>> omega;
    long long volume;
};

// All count vectors (j_0,...,j_{m-1}) with sum t and j_i <= s, in
// lexicographic order.
std::vector<AntiIdeal> enumerate_anti_ideals(const NrtPoset& poset, int t);

// Ascending 1-based column indices selected by the anti-ideal.
std::vector<int> anti_ideal_columns(const NrtPoset& poset, const AntiIdeal& a);

// Sum over blocks of the height of the topmost disagreeing coordinate.
int nrt_distance(const NrtPoset& poset, const Word& x, const Word& y);

SphereProfile sphere_profile(int q, int m, int s, int R);

}  // namespace oca

#endif
