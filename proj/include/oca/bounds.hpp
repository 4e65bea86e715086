#ifndef OCA_BOUNDS_HPP
#define OCA_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "oca/covering_code.hpp"
#include "oca/ordered_array.hpp"

namespace oca {

// An upper-bound value together with the rule chain that produced it.
struct BoundRecord {
    enum class Kind { Ocan, K };
    Kind kind;
    int t_or_R;  // strength for OCAN records, radius for K records
    int m, s;
    int v_or_q;  // alphabet
    long long value;
    std::string rule;
    std::vector<BoundRecord> inputs;
    bool constructive;

    std::string params_string() const;
    std::string trace_string() const;  // rule(sub;sub) path
};

// Memoized depth-bounded search over the rule set; deterministic
// (ties broken by smaller value, then lexicographic rule name).
BoundRecord best_ocan_upper(int t, int m, int s, int v, int depth = 6);
BoundRecord best_k_upper(int q, int m, int s, int R, int depth = 6);

// Replays a record's trace through the construction modules. The result
// verifies and its size is at most the record's value.
OrderedArray materialize_ocan(const BoundRecord& record);
CoveringCode materialize_k(const BoundRecord& record);

struct Table2Row {
    int v, q, m, s, R;
    long long old_value;  // single-alphabet construction at vq
    long long new_value;  // product construction
    std::string old_tag, new_tag;
};

struct Table3Row {
    int q, m, s, R;
    long long prior;      // static annotation from earlier work
    long long new_value;
    std::string tag;
};

std::vector<Table2Row> emit_table2();
std::vector<Table3Row> emit_table3();

// Builds the covering code behind a table-3 row's tag.
CoveringCode materialize_table3_row(const Table3Row& row);

}  // namespace oca

#endif
