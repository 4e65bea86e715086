#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>

#include "doctest.h"
#include "oca/bounds.hpp"
#include "oca/constructions.hpp"
#include "oca/covering_code.hpp"

using namespace oca;

namespace {

Word word_from(const char* digits) {
    Word w;
    for (const char* p = digits; *p; ++p) w.push_back(static_cast<uint8_t>(*p - '0'));
    return w;
}

long long pw(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("the six-word binary code with radius 3 on [2.3]") {
    CoveringCode code = code_even(2, 3, 1);
    CHECK(code.q == 2);
    CHECK(code.radius == 3);
    REQUIRE(code.words.size() == 6);
    std::set<Word> got(code.words.begin(), code.words.end());
    std::set<Word> want = {word_from("000000"), word_from("001010"), word_from("011110"),
                           word_from("000001"), word_from("001011"), word_from("011111")};
    CHECK(got == want);
    CHECK(verify_covering(code).pass);
}

TEST_CASE("radius 2 is too small for the six-word code") {
    CoveringCode code = code_even(2, 3, 1);
    CoveringCode tight(code.poset, code.q, 2);
    for (const Word& w : code.words) tight.add_word(w);
    CHECK_FALSE(verify_covering(tight).pass);
}

TEST_CASE("zero-ideal codes have q^(ms-R) words and verify") {
    for (auto [q, m, s, R] : {std::tuple{2, 2, 3, 3}, {2, 3, 2, 4}, {3, 2, 2, 2}, {2, 2, 3, 4}}) {
        CoveringCode code = zero_ideal_code(q, m, s, R);
        CHECK(static_cast<long long>(code.words.size()) == pw(q, m * s - R));
        CHECK(verify_covering(code).pass);
    }
}

TEST_CASE("odd and even constructions match their size formulas") {
    for (auto [q, s, k, j] : {std::tuple{2, 3, 1, 1}, {2, 3, 1, 2}, {2, 3, 1, 3},
                              {3, 3, 1, 1}, {2, 4, 1, 1}}) {
        CoveringCode code = code_odd(q, s, k, j);
        CHECK(static_cast<long long>(code.words.size()) ==
              pw(q, k * s + j) - pw(q, k * (s - 2) + j) * (pw(q, k) - 1));
        CHECK(code.poset.m == 2 * k + 1);
        CHECK(code.radius == (k + 1) * s - j);
        CHECK(verify_covering(code).pass);
    }
    for (auto [q, s, k] : {std::tuple{2, 3, 1}, {3, 3, 1}, {2, 4, 1}, {2, 3, 2}}) {
        CoveringCode code = code_even(q, s, k);
        CHECK(static_cast<long long>(code.words.size()) ==
              pw(q, k * s) - pw(q, k * (s - 2)) * (pw(q, k) - 1));
        CHECK(code.poset.m == 2 * k);
        CHECK(code.radius == k * s);
        CHECK(verify_covering(code).pass);
    }
}

TEST_CASE("extend_block appends a zero block and s to the radius") {
    CoveringCode base = code_even(2, 3, 1);
    CoveringCode ext = extend_block(base);
    CHECK(ext.poset.m == 3);
    CHECK(ext.radius == 6);
    CHECK(ext.words.size() == base.words.size());
    CHECK(verify_covering(ext).pass);
    // tightness: radius 5 is not enough for these words
    CoveringCode tight(ext.poset, ext.q, 5);
    for (const Word& w : ext.words) tight.add_word(w);
    CHECK_FALSE(verify_covering(tight).pass);
}

TEST_CASE("constant code covers exactly under its hypothesis") {
    CoveringCode good = constant_code(2, 3, 2, 2);  // (t-1)q+1 = 3 <= m
    CHECK(good.words.size() == 2);
    CHECK(verify_covering(good).pass);
    CoveringCode bad = constant_code(2, 2, 2, 2);  // hypothesis fails
    CHECK_FALSE(verify_covering(bad).pass);
}

TEST_CASE("product construction over Z_4^6") {
    OrderedArray a = ooa_rs(FieldSpec(2), 3, 2);  // OCA(8;3,2,3,2)
    CoveringCode inner = code_even(2, 3, 1);
    CoveringCode prod = product_code(a, inner);
    CHECK(prod.q == 4);
    CHECK(prod.words.size() == 48);
    CHECK(verify_covering(prod).pass);
}

TEST_CASE("product checks parameter compatibility") {
    OrderedArray a = ooa_rs(FieldSpec(2), 2, 2);  // strength 2, s = 2
    CoveringCode inner = code_even(2, 3, 1);      // needs strength 3 on [2.3]
    CHECK_THROWS(product_code(a, inner));
}

TEST_CASE("table 3 new-bound codes all materialize and verify") {
    auto rows = emit_table3();
    REQUIRE(rows.size() == 11);
    const long long want[] = {6, 12, 24, 48, 24, 12, 6, 24, 12, 52, 208};
    const long long prior[] = {8, 12, 32, 64, 16, 8, 8, 16, 16, 24, 112};
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CHECK(rows[i].new_value == want[i]);
        CHECK(rows[i].prior == prior[i]);
        CoveringCode code = materialize_table3_row(rows[i]);
        CHECK(code.poset.m == rows[i].m);
        CHECK(code.poset.s == rows[i].s);
        CHECK(code.radius == rows[i].R);
        CHECK(static_cast<long long>(code.words.size()) == rows[i].new_value);
        CHECK(verify_covering(code).pass);
    }
}

TEST_CASE("code text format round-trips") {
    CoveringCode code = code_even(2, 3, 1);
    std::string text = to_string(code);
    std::istringstream is(text);
    CoveringCode back = read_code(is);
    CHECK(back.poset == code.poset);
    CHECK(back.q == code.q);
    CHECK(back.radius == code.radius);
    CHECK(back.words == code.words);
    CHECK(to_string(back) == text);
}

TEST_CASE("duplicate words are rejected by validate") {
    CoveringCode code(NrtPoset(1, 2), 2, 2);
    code.add_word({0, 0});
    code.add_word({0, 0});
    CHECK_THROWS(code.validate());
}
