// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "oca/bounds.hpp"
#include "oca/constructions.hpp"
#include "oca/covering_code.hpp"
#include "oca/gf.hpp"
#include "oca/oracle.hpp"
#include "oca/ordered_array.hpp"

using namespace oca;

namespace {

long long pw(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

OrderedArray example1() {
    OrderedArray a(NrtPoset(4, 2), 2, 2);
    a.append_row({0, 1, 0, 1, 0, 1, 0, 1});
    a.append_row({1, 1, 1, 0, 0, 0, 0, 0});
    a.append_row({0, 0, 1, 1, 1, 0, 1, 0});
    a.append_row({1, 0, 0, 0, 1, 1, 0, 0});
    a.append_row({0, 0, 0, 0, 0, 0, 1, 1});
    return a;
}

bool criterion1() {
    OrderedArray a = example1();
    if (!verify_oca(a).pass) return false;
    if (enumerate_anti_ideals(a.poset, 2).size() != 10) return false;
    VerificationReport ca = verify_ca(a);
    if (ca.pass) return false;
    for (const Violation& v : ca.violations)
        if (v.columns == std::vector<int>{1, 4}) return true;
    return false;
}

bool criterion2() {
    for (auto [v, t, m] :
         {std::tuple{2, 3, 3}, {3, 3, 4}, {4, 3, 5}, {5, 4, 6}, {4, 4, 5}}) {
        OrderedArray a = ooa_rs(FieldSpec(v), t, m);
        VerificationReport report = verify_oca(a);
        if (!report.pass || !report.exact) return false;
        if (a.rows() != pw(v, t)) return false;
    }
    return true;
}

bool criterion3() {
    OrderedArray fused = fuse(ooa_rs(FieldSpec(3), 3, 4));
    return fused.rows() == 25 && fused.v == 2 && fused.t == 3 &&
           verify_oca(fused).pass;
}

bool criterion4() {
    OrderedArray a = corollary2_array(3, 2);
    return a.rows() == 16 && a.poset.m == 4 && a.poset.s == 3 && a.v == 2 &&
           verify_oca(a).pass;
}

bool criterion5() {
    if (corollary2_bound(3, 2) != 16 || corollary2_bound(4, 3) != 261) return false;
    OrderedArray a = corollary2_array(4, 3);
    return a.rows() == 261 && a.poset.m == 5 && a.v == 3 && verify_oca(a).pass;
}

bool criterion6() {
    for (int v : {2, 3})
        for (int s : {2, 3, 5})
            for (int j = 2; j <= std::min(2 * s, 4); ++j) {
                OrderedArray tj = build_tj(v, s, j);
                if (tj.rows() != pw(v, j) - pw(v, (j + 1) / 2)) return false;
                NrtPoset poset(2, s);
                for (const AntiIdeal& anti : enumerate_anti_ideals(poset, j)) {
                    int j1 = anti.counts[0], j2 = anti.counts[1];
                    int tbar = std::min(j1, j2);
                    auto cols = anti_ideal_columns(poset, anti);
                    for (long long code = 0; code < pw(v, j); ++code) {
                        std::vector<uint8_t> tuple(j);
                        long long x = code;
                        for (int i = 0; i < j; ++i) {
                            tuple[i] = static_cast<uint8_t>(x % v);
                            x /= v;
                        }
                        bool required = false;
                        for (int i = 0; i < tbar; ++i)
                            if (tuple[j1 - tbar + i] != tuple[j1 + j2 - tbar + i])
                                required = true;
                        if (!required) continue;
                        bool found = false;
                        for (int r = 0; r < tj.rows() && !found; ++r) {
                            bool match = true;
                            for (int i = 0; i < j; ++i) {
                                int c = cols[i] - 1;
                                if (!tj.is_wildcard(r, c) && tj.at(r, c) != tuple[i])
                                    match = false;
                            }
                            found = match;
                        }
                        if (!found) return false;
                    }
                }
            }
    return true;
}

bool criterion7() {
    OrderedArray a = chain_project(ooa_rs(FieldSpec(2), 3, 3));
    OrderedArray b = kleitman_spencer_ca(2);
    OrderedArray c = kleitman_spencer_ca(3);
    OrderedArray out = augment_alphabet_s3(a, b, c);
    long long want = a.rows() + 3 * b.rows() + c.rows() + 3 * 2 * 2 + 1;
    return out.rows() == want && out.v == 3 && out.t == 3 && out.poset.m == 3 &&
           verify_oca(out).pass;
}

bool criterion8() {
    for (auto [v, t, m] : {std::tuple{2, 3, 3}, {2, 4, 3}, {3, 3, 4}, {3, 4, 4}}) {
        OrderedArray a = ooa_rs(FieldSpec(v), t, m);
        OrderedArray db = derive_block(a);
        if (db.rows() > a.rows() / v || !verify_oca(db).pass) return false;
        OrderedArray dd = derive_depth(a);
        if (dd.rows() > a.rows() / v || !verify_oca(dd).pass) return false;
    }
    return true;
}

bool criterion9() {
    const long long want[] = {6, 12, 24, 48, 24, 12, 6, 24, 12, 52, 208};
    auto rows = emit_table3();
    if (rows.size() != 11) return false;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].new_value != want[i]) return false;
        CoveringCode code = materialize_table3_row(rows[i]);
        if (static_cast<long long>(code.words.size()) != rows[i].new_value) return false;
        if (code.poset.m != rows[i].m || code.poset.s != rows[i].s ||
            code.radius != rows[i].R)
            return false;
        if (!verify_covering(code).pass) return false;
    }
    return true;
}

bool criterion10() {
    auto rows = emit_table2();
    if (rows.size() != 30) return false;
    auto find = [&](int v, int q, int m, int s) -> const Table2Row* {
        for (const auto& r : rows)
            if (r.v == v && r.q == q && r.m == m && r.s == s) return &r;
        return nullptr;
    };
    const Table2Row* probe = find(3, 3, 3, 5);
    if (!probe || probe->old_value != 478953 || probe->new_value != 413343) return false;
    probe = find(4, 3, 2, 5);
    if (!probe || probe->old_value != 229824 || probe->new_value != 193536) return false;
    for (const auto& r : rows) {
        long long vq = static_cast<long long>(r.v) * r.q;
        long long expect_old =
            r.m == 3 ? pw(vq, r.s + 1) - pw(vq, r.s - 1) * (vq - 1)
                     : pw(vq, r.s) - pw(vq, r.s - 2) * (vq - 1);
        long long expect_new =
            r.m == 3 ? pw(r.v, r.s + 1) * (pw(r.q, r.s + 1) - pw(r.q, r.s - 1) * (r.q - 1))
                     : pw(r.v, r.s) * (pw(r.q, r.s) - pw(r.q, r.s - 2) * (r.q - 1));
        if (r.old_value != expect_old || r.new_value != expect_new) return false;
    }
    // full construction + exhaustive verification of the two binary rows
    OrderedArray a2 = ooa_rs(FieldSpec(2), 3, 2);  // OCA(8;3,2,3,2)
    CoveringCode p2 = product_code(a2, code_even(2, 3, 1));
    if (p2.words.size() != 48 || !verify_covering(p2).pass) return false;

    OrderedArray a3 = chain_project(ooa_rs(FieldSpec(2), 4, 3));  // OCA(16;4,3,3,2)
    CoveringCode p3 = product_code(a3, code_odd(2, 3, 1, 1));
    if (p3.words.size() != 192 || !verify_covering(p3).pass) return false;
    return true;
}

bool criterion11() {
    CoveringCode code = code_even(2, 3, 1);
    if (code.words.size() != 6 || !verify_covering(code).pass) return false;
    ExactCoverResult result = exact_min_covering(2, 2, 3, 3, 6);
    if (!result.found) return false;
    std::printf("    [computed] exact K(2,[2.3],R=3) = %d -> five centers %s\n",
                result.value, result.value <= 5 ? "suffice" : "do not suffice");
    return result.value == 6 && verify_covering(*result.witness).pass;
}

bool criterion12() {
    std::mt19937 rng(2024);
    // metric axioms on random triples
    for (auto [m, s, q] : {std::tuple{3, 4, 2}, {4, 3, 3}, {6, 2, 4}, {2, 5, 5}}) {
        NrtPoset poset(m, s);
        for (int trial = 0; trial < 2500; ++trial) {
            Word x(m * s), y(m * s), z(m * s);
            for (auto& e : x) e = static_cast<uint8_t>(rng() % q);
            for (auto& e : y) e = static_cast<uint8_t>(rng() % q);
            for (auto& e : z) e = static_cast<uint8_t>(rng() % q);
            int dxy = nrt_distance(poset, x, y);
            if (dxy != nrt_distance(poset, y, x)) return false;
            if ((dxy == 0) != (x == y)) return false;
            if (dxy > nrt_distance(poset, x, z) + nrt_distance(poset, z, y)) return false;
        }
    }
    // omega table vs exhaustive ideal census for all posets with m*s <= 10
    for (int m = 1; m <= 10; ++m)
        for (int s = 1; m * s <= 10; ++s) {
            IdealCensus census = brute_ideals(NrtPoset(m, s));
            SphereProfile profile = sphere_profile(2, m, s, m * s);
            for (int i = 1; i <= m * s; ++i)
                for (int j = 1; j <= m; ++j) {
                    long long a = (i < (int)census.histogram.size() &&
                                   j < (int)census.histogram[i].size())
                                      ? census.histogram[i][j]
                                      : 0;
                    long long b = (i < (int)profile.omega.size() &&
                                   j < (int)profile.omega[i].size())
                                      ? profile.omega[i][j]
                                      : 0;
                    if (a != b) return false;
                }
        }
    // center independence of ball sizes on spaces up to 2^16
    for (auto [q, m, s] : {std::tuple{2, 2, 3}, {2, 4, 2}, {3, 2, 2}, {4, 2, 2}, {2, 2, 8}}) {
        NrtPoset poset(m, s);
        long long space = pw(q, m * s);
        if (space > (1 << 16)) return false;
        for (int R = 0; R <= m * s; R += std::max(1, m * s / 3)) {
            long long want = sphere_profile(q, m, s, R).volume;
            for (int rep = 0; rep < 3; ++rep) {
                Word center(m * s);
                for (auto& e : center) e = static_cast<uint8_t>(rng() % q);
                long long count = 0;
                for (long long idx = 0; idx < space; ++idx) {
                    Word w(m * s);
                    long long x = idx;
                    for (int c = 0; c < m * s; ++c) {
                        w[c] = static_cast<uint8_t>(x % q);
                        x /= q;
                    }
                    if (nrt_distance(poset, w, center) <= R) ++count;
                }
                if (count != want) return false;
            }
        }
    }
    // permutation invariance of verification
    OrderedArray base = example1();
    for (int trial = 0; trial < 100; ++trial) {
        OrderedArray a(base.poset, base.v, base.t);
        std::vector<int> order(base.rows());
        for (int i = 0; i < base.rows(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int r : order) {
            std::vector<uint8_t> row(base.entries.begin() + r * base.cols(),
                                     base.entries.begin() + (r + 1) * base.cols());
            a.append_row(row);
        }
        for (int c = 0; c < a.cols(); ++c) {
            std::vector<uint8_t> perm = {0, 1};
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int r = 0; r < a.rows(); ++r) a.at(r, c) = perm[a.at(r, c)];
        }
        if (!verify_oca(a).pass) return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    std::function<bool()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "5x8 example verifies as OCA and fails as CA at columns {1,4}", criterion1},
        {2, "polynomial-evaluation OOAs are exact for all five parameter sets", criterion2},
        {3, "fusion yields a verified 25-row strength-3 binary array", criterion3},
        {4, "block augmentation reproduces the 16-row OCA(3,4,3,2)", criterion4},
        {5, "closed-form bounds 16/261 and the 261-row materialization", criterion5},
        {6, "T^j row counts and suffix-coverage property", criterion6},
        {7, "alphabet augmentation at s=3 matches its size formula", criterion7},
        {8, "derivations verify with at most floor(N/v) rows", criterion8},
        {9, "table of 11 new code bounds regenerates and materializes", criterion9},
        {10, "table of 30 product bounds regenerates; binary rows verified", criterion10},
        {11, "six-word code verified; exact search settles the minimum", criterion11},
        {12, "metric/omega/volume/permutation property suites", criterion12},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::printf("    [exception] %s\n", e.what());
        }
        std::printf("criterion %2d: %s - %s\n", c.id, ok ? "PASS" : "FAIL", c.label);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
