#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oca/ordered_array.hpp"

using namespace oca;

namespace {

// the reference 5x8 strength-2 array over [4.2]
OrderedArray example_array() {
    OrderedArray a(NrtPoset(4, 2), 2, 2);
    a.append_row({0, 1, 0, 1, 0, 1, 0, 1});
    a.append_row({1, 1, 1, 0, 0, 0, 0, 0});
    a.append_row({0, 0, 1, 1, 1, 0, 1, 0});
    a.append_row({1, 0, 0, 0, 1, 1, 0, 0});
    a.append_row({0, 0, 0, 0, 0, 0, 1, 1});
    return a;
}

OrderedArray random_array(std::mt19937& rng, int rows, int m, int s, int v, int t) {
    OrderedArray a(NrtPoset(m, s), v, t);
    for (int r = 0; r < rows; ++r) {
        std::vector<uint8_t> row(m * s);
        for (auto& x : row) x = static_cast<uint8_t>(rng() % v);
        a.append_row(row);
    }
    return a;
}

}  // namespace

TEST_CASE("the 5x8 example is an OCA but not a CA") {
    OrderedArray a = example_array();
    VerificationReport oca_report = verify_oca(a);
    CHECK(oca_report.pass);
    CHECK_FALSE(oca_report.exact);  // 5 rows > 2^2, some pair covered twice

    VerificationReport ca_report = verify_ca(a);
    CHECK_FALSE(ca_report.pass);
    bool found_14 = false;
    for (const Violation& viol : ca_report.violations)
        if (viol.columns == std::vector<int>{1, 4}) found_14 = true;
    CHECK(found_14);
}

TEST_CASE("single flipped entry breaks the example") {
    OrderedArray a = example_array();
    a.at(4, 6) = 0;  // kill the (1,*) coverage on block 3
    CHECK_FALSE(verify_oca(a).pass);
}

TEST_CASE("pigeonhole: fewer than v^t rows can never pass") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        OrderedArray a = random_array(rng, 3, 3, 2, 2, 2);  // 3 rows < 4
        CHECK_FALSE(verify_oca(a).pass);
    }
}

TEST_CASE("row and per-column symbol permutations preserve the verdict") {
    std::mt19937 rng(17);
    OrderedArray base = example_array();
    for (int trial = 0; trial < 100; ++trial) {
        OrderedArray a = base;
        // shuffle rows
        std::vector<int> order(a.rows());
        for (int i = 0; i < a.rows(); ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        OrderedArray shuffled(a.poset, a.v, a.t);
        for (int r : order) {
            std::vector<uint8_t> row(a.entries.begin() + r * a.cols(),
                                     a.entries.begin() + (r + 1) * a.cols());
            shuffled.append_row(row);
        }
        // independent symbol permutation in every column
        for (int c = 0; c < shuffled.cols(); ++c) {
            std::vector<uint8_t> perm(a.v);
            for (int i = 0; i < a.v; ++i) perm[i] = static_cast<uint8_t>(i);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int r = 0; r < shuffled.rows(); ++r)
                shuffled.at(r, c) = perm[shuffled.at(r, c)];
        }
        CHECK(verify_oca(shuffled).pass);
    }
}

TEST_CASE("s = 1 reduces verify_oca to verify_ca") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        OrderedArray a = random_array(rng, 5, 4, 1, 2, 2);
        CHECK(verify_oca(a).pass == verify_ca(a).pass);
    }
}

TEST_CASE("text format round-trips including wildcards") {
    OrderedArray a(NrtPoset(2, 2), 3, 2);
    a.append_row({0, 1, 2, 0}, {0, 0, 0, 1});
    a.append_row({2, 2, 1, 1});
    std::string text = to_string(a);
    std::istringstream is(text);
    OrderedArray back = read_array(is);
    CHECK(back.poset == a.poset);
    CHECK(back.v == a.v);
    CHECK(back.t == a.t);
    CHECK(back.entries == a.entries);
    CHECK(back.is_wildcard(0, 3));
    CHECK_FALSE(back.is_wildcard(1, 3));
    CHECK(to_string(back) == text);
}

TEST_CASE("verification refuses uninstantiated wildcards") {
    OrderedArray a(NrtPoset(2, 1), 2, 1);
    a.append_row({0, 0}, {1, 1});
    a.append_row({0, 0});
    a.append_row({1, 1});
    CHECK_THROWS(verify_oca(a));
    OrderedArray filled = instantiate_wildcards(a, 1);
    CHECK_FALSE(filled.has_wildcards());
    CHECK(filled.at(0, 0) == 1);
    CHECK(filled.at(0, 1) == 1);
    CHECK(verify_oca(filled).pass);
}

TEST_CASE("exactness flag marks orthogonal coverage") {
    // full factorial on one block of height 2: every pair exactly once
    OrderedArray a(NrtPoset(1, 2), 2, 2);
    a.append_row({0, 0});
    a.append_row({1, 0});
    a.append_row({0, 1});
    a.append_row({1, 1});
    VerificationReport report = verify_oca(a);
    CHECK(report.pass);
    CHECK(report.exact);
}

TEST_CASE("lambda > 1 coverage counting") {
    OrderedArray a(NrtPoset(1, 2), 2, 2, 2);
    a.append_row({0, 0});
    a.append_row({1, 0});
    a.append_row({0, 1});
    a.append_row({1, 1});
    CHECK_FALSE(verify_oca(a).pass);  // each tuple only once, lambda = 2
    for (int r = 0; r < 4; ++r) {
        std::vector<uint8_t> row = {static_cast<uint8_t>(r & 1),
                                    static_cast<uint8_t>(r >> 1)};
        a.append_row(row);
    }
    VerificationReport report = verify_oca(a);
    CHECK(report.pass);
    CHECK(report.exact);
}

TEST_CASE("violations report missing tuples with counts") {
    OrderedArray a(NrtPoset(1, 2), 2, 2);
    a.append_row({0, 0});
    a.append_row({1, 0});
    a.append_row({0, 1});
    VerificationReport report = verify_oca(a);
    REQUIRE_FALSE(report.pass);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].tuple == std::vector<uint8_t>{1, 1});
    CHECK(report.violations[0].count == 0);
}
