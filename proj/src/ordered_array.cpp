#include "oca/ordered_array.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace oca {

namespace {

constexpr long long kTupleTableCap = 1LL << 24;

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Shared coverage loop: checks each given 1-based column set against all
// v^t tuples.
VerificationReport check_column_sets(const OrderedArray& a,
                                     const std::vector<std::vector<int>>& column_sets,
                                     int t) {
    if (a.has_wildcards())
        throw std::invalid_argument("verify: array has uninstantiated wildcards");
    long long table_size = pow_ll(a.v, t);
    if (t > 12 || table_size > kTupleTableCap)
        throw std::invalid_argument("verify: tuple table exceeds cap (t <= 12, v^t <= 2^24)");

    VerificationReport report;
    report.pass = true;
    report.exact = true;
    std::vector<long long> counts(table_size);
    for (const auto& cols : column_sets) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int r = 0; r < a.rows(); ++r) {
            long long idx = 0;
            for (int c : cols) idx = idx * a.v + a.at(r, c - 1);
            ++counts[idx];
        }
        for (long long idx = 0; idx < table_size; ++idx) {
            if (counts[idx] != a.lambda) report.exact = false;
            if (counts[idx] < a.lambda) {
                report.pass = false;
                Violation viol;
                viol.columns = cols;
                viol.count = counts[idx];
                viol.tuple.resize(t);
                long long x = idx;
                for (int i = t - 1; i >= 0; --i) {
                    viol.tuple[i] = static_cast<uint8_t>(x % a.v);
                    x /= a.v;
                }
                report.violations.push_back(std::move(viol));
            }
        }
    }
    if (!report.pass) report.exact = false;
    return report;
}

}  // namespace

OrderedArray::OrderedArray(NrtPoset poset_, int v_, int t_, int lambda_)
    : poset(poset_), v(v_), t(t_), lambda(lambda_) {
    if (v < 1) throw std::invalid_argument("OrderedArray: alphabet size must be positive");
    if (t < 0 || t > poset.size())
        throw std::invalid_argument("OrderedArray: strength out of range");
    if (lambda < 1) throw std::invalid_argument("OrderedArray: lambda must be positive");
}

void OrderedArray::append_row(const std::vector<uint8_t>& row,
                              const std::vector<uint8_t>& mask) {
    if (static_cast<int>(row.size()) != cols())
        throw std::invalid_argument("append_row: wrong length");
    if (!mask.empty() && mask.size() != row.size())
        throw std::invalid_argument("append_row: wrong mask length");
    for (size_t i = 0; i < row.size(); ++i) {
        bool wild = !mask.empty() && mask[i];
        if (!wild && row[i] >= v)
            throw std::invalid_argument("append_row: entry out of alphabet");
    }
    entries.insert(entries.end(), row.begin(), row.end());
    if (mask.empty())
        wildcard.insert(wildcard.end(), row.size(), 0);
    else
        wildcard.insert(wildcard.end(), mask.begin(), mask.end());
}

bool OrderedArray::has_wildcards() const {
    return std::any_of(wildcard.begin(), wildcard.end(), [](uint8_t w) { return w != 0; });
}

VerificationReport verify_oca(const OrderedArray& a) {
    std::vector<std::vector<int>> sets;
    for (const AntiIdeal& ai : enumerate_anti_ideals(a.poset, a.t))
        sets.push_back(anti_ideal_columns(a.poset, ai));
    return check_column_sets(a, sets, a.t);
}

VerificationReport verify_ca(const OrderedArray& a) {
    int n = a.cols();
    if (a.t > n) throw std::invalid_argument("verify_ca: strength exceeds column count");
    std::vector<std::vector<int>> sets;
    std::vector<int> pick(a.t);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == a.t) {
            sets.push_back(pick);
            return;
        }
        for (int c = start; c <= n - (a.t - depth) + 1; ++c) {
            pick[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
    return check_column_sets(a, sets, a.t);
}

OrderedArray instantiate_wildcards(const OrderedArray& a, int fill) {
    if (fill < 0 || fill >= a.v)
        throw std::invalid_argument("instantiate_wildcards: fill out of alphabet");
    OrderedArray out = a;
    for (size_t i = 0; i < out.entries.size(); ++i)
        if (out.wildcard[i]) out.entries[i] = static_cast<uint8_t>(fill);
    std::fill(out.wildcard.begin(), out.wildcard.end(), 0);
    return out;
}

void write_array(std::ostream& os, const OrderedArray& a) {
    os << "OCA " << a.rows() << ' ' << a.t << ' ' << a.poset.m << ' ' << a.poset.s
       << ' ' << a.v << ' ' << a.lambda << '\n';
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            if (c > 0) os << ' ';
            if (a.is_wildcard(r, c))
                os << '*';
            else
                os << static_cast<int>(a.at(r, c));
        }
        os << '\n';
    }
}

OrderedArray read_array(std::istream& is) {
    std::string tag;
    int n, t, m, s, v, lambda;
    if (!(is >> tag >> n >> t >> m >> s >> v >> lambda) || tag != "OCA")
        throw std::runtime_error("read_array: bad header");
    OrderedArray a(NrtPoset(m, s), v, t, lambda);
    for (int r = 0; r < n; ++r) {
        std::vector<uint8_t> row(m * s), mask(m * s, 0);
        for (int c = 0; c < m * s; ++c) {
            std::string tok;
            if (!(is >> tok)) throw std::runtime_error("read_array: truncated");
            if (tok == "*") {
                mask[c] = 1;
            } else {
                int x = std::stoi(tok);
                if (x < 0 || x >= v) throw std::runtime_error("read_array: entry out of range");
                row[c] = static_cast<uint8_t>(x);
            }
        }
        a.append_row(row, mask);
    }
    return a;
}

std::string to_string(const OrderedArray& a) {
    std::ostringstream os;
    write_array(os, a);
    return os.str();
}

}  // namespace oca
