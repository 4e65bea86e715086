#include "oca/nrt.hpp"

#include <numeric>
#include <stdexcept>

namespace oca {

NrtPoset::NrtPoset(int m_, int s_) : m(m_), s(s_) {
    if (m < 1 || s < 1)
        throw std::invalid_argument("NrtPoset: m and s must be positive");
}

int AntiIdeal::size() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::vector<AntiIdeal> enumerate_anti_ideals(const NrtPoset& poset, int t) {
    if (t < 0 || t > poset.size())
        throw std::invalid_argument("enumerate_anti_ideals: t out of range");
    std::vector<AntiIdeal> out;
    std::vector<int> counts(poset.m, 0);
    // Lexicographic enumeration of compositions of t with parts <= s.
    auto rec = [&](auto&& self, int block, int remaining) -> void {
        if (block == poset.m) {
            if (remaining == 0) out.push_back(AntiIdeal{counts});
            return;
        }
        int tail_cap = (poset.m - block - 1) * poset.s;
        for (int j = 0; j <= poset.s && j <= remaining; ++j) {
            if (remaining - j > tail_cap) continue;
            counts[block] = j;
            self(self, block + 1, remaining - j);
        }
        counts[block] = 0;
    };
    rec(rec, 0, t);
    return out;
}

std::vector<int> anti_ideal_columns(const NrtPoset& poset, const AntiIdeal& a) {
    if (static_cast<int>(a.counts.size()) != poset.m)
        throw std::invalid_argument("anti_ideal_columns: count vector length mismatch");
    std::vector<int> cols;
    for (int i = 0; i < poset.m; ++i) {
        int j = a.counts[i];
        if (j < 0 || j > poset.s)
            throw std::invalid_argument("anti_ideal_columns: count out of range");
        for (int c = (i + 1) * poset.s - j + 1; c <= (i + 1) * poset.s; ++c)
            cols.push_back(c);
    }
    return cols;
}

int nrt_distance(const NrtPoset& poset, const Word& x, const Word& y) {
    if (static_cast<int>(x.size()) != poset.size() || x.size() != y.size())
        throw std::invalid_argument("nrt_distance: word length mismatch");
    int d = 0;
    for (int i = 0; i < poset.m; ++i) {
        for (int h = poset.s; h >= 1; --h) {
            int idx = i * poset.s + h - 1;
            if (x[idx] != y[idx]) {
                d += h;
                break;
            }
        }
    }
    return d;
}

SphereProfile sphere_profile(int q, int m, int s, int R) {
    if (q < 2 || m < 1 || s < 1 || R < 0 || R > m * s)
        throw std::invalid_argument("sphere_profile: parameter out of range");
    int n = m * s;
    // Ideals of [m.s] are height vectors (h_0,...,h_{m-1}) in {0..s}^m;
    // cardinality = sum h_i, maximal-element count = #nonzero h_i.
    // DP over blocks: count[i][j] after b blocks = #vectors with sum i and
    // j nonzero entries.
    std::vector<std::vector<long long>> count(n + 1, std::vector<long long>(m + 1, 0));
    count[0][0] = 1;
    for (int b = 0; b < m; ++b) {
        std::vector<std::vector<long long>> next(n + 1, std::vector<long long>(m + 1, 0));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= m; ++j) {
                if (count[i][j] == 0) continue;
                next[i][j] += count[i][j];  // h_b = 0
                for (int h = 1; h <= s && i + h <= n; ++h)
                    next[i + h][j + 1] += count[i][j];
            }
        count = std::move(next);
    }

    SphereProfile p;
    p.q = q;
    p.m = m;
    p.s = s;
    p.R = R;
    p.omega.assign(n + 1, {});
    for (int i = 1; i <= n; ++i) {
        int jmax = std::min(m, i);
        p.omega[i].assign(jmax + 1, 0);
        for (int j = 1; j <= jmax; ++j) p.omega[i][j] = count[i][j];
    }
    long long vol = 1;
    long long qll = q;
    for (int i = 1; i <= R; ++i) {
        for (int j = 1; j <= std::min(m, i); ++j) {
            long long term = p.omega[i][j];
            for (int e = 0; e < i - j; ++e) term *= qll;
            for (int e = 0; e < j; ++e) term *= qll - 1;
            vol += term;
        }
    }
    p.volume = vol;
    return p;
}

}  // namespace oca
