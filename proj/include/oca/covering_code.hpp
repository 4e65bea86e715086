#ifndef OCA_COVERING_CODE_HPP
#define OCA_COVERING_CODE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "oca/nrt.hpp"
#include "oca/ordered_array.hpp"

namespace oca {

// A set of words in Z_q^{ms} with a claimed covering radius.
struct CoveringCode {
    NrtPoset poset;
    int q;
    int radius;
    std::vector<Word> words;

    CoveringCode(NrtPoset poset_, int q_, int radius_);

    void add_word(const Word& w);
    // throws on out-of-range entries or duplicate words
    void validate() const;
};

struct CoverReport {
    bool pass = false;
    std::vector<Word> uncovered;
};

// Exhaustive scan of Z_q^{ms}; requires q^{ms} <= 2^26.
CoverReport verify_covering(const CoveringCode& code);

// All words vanishing on the size-R ideal made of the lowest blocks:
// q^{ms-R} codewords, the general upper bound.
CoveringCode zero_ideal_code(int q, int m, int s, int R);

// m = 2k+1, R = (k+1)s - j: q^{ks+j} - q^{k(s-2)+j} (q^k - 1) codewords.
CoveringCode code_odd(int q, int s, int k, int j);

// m = 2k, R = ks: q^{ks} - q^{k(s-2)} (q^k - 1) codewords.
CoveringCode code_even(int q, int s, int k);

// Append an all-zero block to every codeword; radius grows by s.
CoveringCode extend_block(const CoveringCode& code);

// The q constant words, claimed radius ms - t. Needs (t-1)q + 1 <= m for
// the claim to hold; the construction is emitted regardless and the
// verifier decides.
CoveringCode constant_code(int q, int m, int s, int t);

// Alphabet product: a must be an OCA of strength ms - R on the code's
// poset; output words are q*a_row + codeword over alphabet v*q.
CoveringCode product_code(const OrderedArray& a, const CoveringCode& code);

// Text format: header "CODE <q> <m> <s> <R> <size>", one word per line,
// block-major bottom-first.
void write_code(std::ostream& os, const CoveringCode& code);
CoveringCode read_code(std::istream& is);
std::string to_string(const CoveringCode& code);

}  // namespace oca

#endif
