#ifndef OCA_ORDERED_ARRAY_HPP
#define OCA_ORDERED_ARRAY_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "oca/nrt.hpp"

namespace oca {

// N x (m*s) array over symbols 0..v-1 with a claimed strength t and index
// lambda. s = 1 is the plain covering-array case. Wildcard entries mark
// positions that were unconstrained at construction time; they must be
// instantiated before verification.
struct OrderedArray {
    NrtPoset poset;
    int v;
    int t;
    int lambda = 1;
    std::vector<uint8_t> entries;   // row-major, rows() x poset.size()
    std::vector<uint8_t> wildcard;  // same shape; nonzero = unconstrained

    OrderedArray(NrtPoset poset_, int v_, int t_, int lambda_ = 1);

    int rows() const { return static_cast<int>(entries.size()) / poset.size(); }
    int cols() const { return poset.size(); }

    uint8_t& at(int r, int c) { return entries[r * cols() + c]; }
    uint8_t at(int r, int c) const { return entries[r * cols() + c]; }
    bool is_wildcard(int r, int c) const { return wildcard[r * cols() + c] != 0; }

    void append_row(const std::vector<uint8_t>& row,
                    const std::vector<uint8_t>& mask = {});
    bool has_wildcards() const;
};

struct Violation {
    std::vector<int> columns;     // 1-based column set that failed
    std::vector<uint8_t> tuple;   // missing or under-covered tuple
    long long count;              // achieved coverage count
};

struct VerificationReport {
    bool pass = false;
    bool exact = false;  // every tuple covered exactly lambda times
    std::vector<Violation> violations;
};

// Coverage check over every size-t anti-ideal of the array's poset.
VerificationReport verify_oca(const OrderedArray& a);

// Coverage check over every t-subset of all ms columns (anti-chain view).
VerificationReport verify_ca(const OrderedArray& a);

OrderedArray instantiate_wildcards(const OrderedArray& a, int fill);

// Text format: header "OCA <N> <t> <m> <s> <v> <lambda>", then N lines of
// ms space-separated entries, '*' for wildcards.
void write_array(std::ostream& os, const OrderedArray& a);
OrderedArray read_array(std::istream& is);
std::string to_string(const OrderedArray& a);

}  // namespace oca

#endif
