#include "oca/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace oca {

namespace {

Word decode_word(long long index, int q, int n) {
    Word w(n);
    for (int c = 0; c < n; ++c) {
        w[c] = static_cast<uint8_t>(index % q);
        index /= q;
    }
    return w;
}

std::vector<Word> enumerate_space(int q, int n, long long size) {
    std::vector<Word> words;
    words.reserve(size);
    for (long long i = 0; i < size; ++i) words.push_back(decode_word(i, q, n));
    return words;
}

}  // namespace

ExactCoverResult exact_min_covering(int q, int m, int s, int R, int cap) {
    long long space = 1;
    for (int i = 0; i < m * s; ++i) {
        space *= q;
        if (space > 64) throw std::invalid_argument("exact_min_covering: space exceeds 64 words");
    }
    if (cap < 1 || cap > 7) throw std::invalid_argument("exact_min_covering: cap must be 1..7");

    NrtPoset poset(m, s);
    int n = static_cast<int>(space);
    std::vector<Word> words = enumerate_space(q, m * s, space);
    std::vector<uint64_t> ball(n, 0);
    for (int c = 0; c < n; ++c)
        for (int x = 0; x < n; ++x)
            if (nrt_distance(poset, words[c], words[x]) <= R) ball[c] |= 1ULL << x;
    uint64_t full = (n == 64) ? ~0ULL : (1ULL << n) - 1;
    int max_ball = 0;
    for (int c = 0; c < n; ++c) max_ball = std::max(max_ball, std::popcount(ball[c]));

    std::vector<int> chosen;
    std::vector<int> best;
    // depth-first over center subsets in lexicographic order; the first
    // center is pinned to word 0 by translation invariance
    auto search = [&](auto&& self, int next, uint64_t covered, int remaining) -> bool {
        if (covered == full) {
            best = chosen;
            return true;
        }
        if (remaining == 0) return false;
        int uncovered = std::popcount(full & ~covered);
        if (static_cast<long long>(remaining) * max_ball < uncovered) return false;
        for (int c = next; c < n; ++c) {
            if ((ball[c] & ~covered) == 0) continue;
            chosen.push_back(c);
            if (self(self, c + 1, covered | ball[c], remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    };

    ExactCoverResult result;
    for (int size = 1; size <= cap; ++size) {
        chosen.assign(1, 0);
        if (search(search, 1, ball[0], size - 1)) {
            result.found = true;
            result.value = size;
            CoveringCode code(poset, q, R);
            for (int c : best) code.add_word(words[c]);
            result.witness = std::move(code);
            return result;
        }
    }
    result.found = false;
    result.value = cap;
    return result;
}

CoveringCode greedy_covering(int q, int m, int s, int R, unsigned seed) {
    (void)seed;
    long long space = 1;
    for (int i = 0; i < m * s; ++i) {
        space *= q;
        if (space > (1LL << 20)) throw std::invalid_argument("greedy_covering: space exceeds 2^20");
    }
    NrtPoset poset(m, s);
    std::vector<Word> words = enumerate_space(q, m * s, space);
    std::vector<char> covered(space, 0);
    long long remaining = space;

    CoveringCode code(poset, q, R);
    while (remaining > 0) {
        long long best_center = -1, best_gain = -1;
        for (long long c = 0; c < space; ++c) {
            long long gain = 0;
            for (long long x = 0; x < space; ++x)
                if (!covered[x] && nrt_distance(poset, words[c], words[x]) <= R) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best_center = c;
            }
        }
        code.add_word(words[best_center]);
        for (long long x = 0; x < space; ++x)
            if (!covered[x] && nrt_distance(poset, words[best_center], words[x]) <= R) {
                covered[x] = 1;
                --remaining;
            }
    }
    return code;
}

IdealCensus brute_ideals(const NrtPoset& poset) {
    if (poset.size() > 12) throw std::invalid_argument("brute_ideals: m*s <= 12 required");
    int m = poset.m, s = poset.s;
    IdealCensus census;
    census.histogram.assign(poset.size() + 1, std::vector<long long>(m + 1, 0));
    std::vector<int> heights(m, 0);
    while (true) {
        int size = 0, maximal = 0;
        for (int h : heights) {
            size += h;
            if (h > 0) ++maximal;
        }
        census.ideals.push_back(heights);
        census.histogram[size][maximal] += 1;
        int i = m - 1;
        while (i >= 0 && heights[i] == s) heights[i--] = 0;
        if (i < 0) break;
        ++heights[i];
    }
    return census;
}

}  // namespace oca
