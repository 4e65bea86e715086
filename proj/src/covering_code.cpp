#include "oca/covering_code.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oca {

namespace {

constexpr long long kSpaceCap = 1LL << 26;

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// odometer step; returns false after the last word
bool next_word(Word& w, int q) {
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] + 1 < q) {
            ++w[i];
            std::fill(w.begin(), w.begin() + i, 0);
            return true;
        }
    }
    return false;
}

}  // namespace

CoveringCode::CoveringCode(NrtPoset poset_, int q_, int radius_)
    : poset(poset_), q(q_), radius(radius_) {
    if (q < 1) throw std::invalid_argument("CoveringCode: alphabet must be positive");
    if (radius < 0 || radius > poset.size())
        throw std::invalid_argument("CoveringCode: radius out of range");
}

void CoveringCode::add_word(const Word& w) {
    if (static_cast<int>(w.size()) != poset.size())
        throw std::invalid_argument("CoveringCode: word length mismatch");
    for (uint8_t x : w)
        if (x >= q) throw std::invalid_argument("CoveringCode: entry out of alphabet");
    words.push_back(w);
}

void CoveringCode::validate() const {
    std::set<Word> seen(words.begin(), words.end());
    if (seen.size() != words.size())
        throw std::invalid_argument("CoveringCode: duplicate words");
}

CoverReport verify_covering(const CoveringCode& code) {
    int n = code.poset.size();
    long long space = 1;
    for (int i = 0; i < n; ++i) {
        space *= code.q;
        if (space > kSpaceCap)
            throw std::invalid_argument("verify_covering: space exceeds 2^26 cap");
    }
    CoverReport report;
    report.pass = true;
    Word x(n, 0);
    do {
        bool covered = false;
        for (const Word& c : code.words)
            if (nrt_distance(code.poset, x, c) <= code.radius) {
                covered = true;
                break;
            }
        if (!covered) {
            report.pass = false;
            report.uncovered.push_back(x);
        }
    } while (next_word(x, code.q));
    return report;
}

CoveringCode zero_ideal_code(int q, int m, int s, int R) {
    if (R <= 0 || R >= m * s) throw std::invalid_argument("zero_ideal_code: 0 < R < ms required");
    CoveringCode code(NrtPoset(m, s), q, R);
    int full_blocks = R / s, extra = R % s;
    Word w(m * s, 0);
    // the fixed ideal: blocks 0..full_blocks-1 entirely, plus the bottom
    // `extra` entries of the next block; everything after it is free
    std::vector<int> free_idx;
    for (int i = full_blocks * s + extra; i < m * s; ++i) free_idx.push_back(i);
    long long count = pow_ll(q, static_cast<int>(free_idx.size()));
    for (long long codeword = 0; codeword < count; ++codeword) {
        long long x = codeword;
        for (int idx : free_idx) {
            w[idx] = static_cast<uint8_t>(x % q);
            x /= q;
        }
        code.add_word(w);
    }
    code.validate();
    return code;
}

namespace {

// Shared assembly for the odd/even constructions. Word layout:
//  - left blocks 0..k-1: zeros with (u_i, w_i) on the top two heights
//  - optional middle block: bottom zeros then the j-tuple z0
//  - right blocks: bottom (u_i, w_i) then the (s-2)-tuple z segment
// Pairs (u,w) with u != 0 and w == 0 (as vectors) are dropped.
CoveringCode build_modified_code(int q, int s, int k, int j, bool with_middle) {
    int m = with_middle ? 2 * k + 1 : 2 * k;
    int radius = with_middle ? (k + 1) * s - j : k * s;
    CoveringCode code(NrtPoset(m, s), q, radius);

    long long z_count = pow_ll(q, k * (s - 2) + j);
    long long uw_count = pow_ll(q, 2 * k);
    std::vector<int> z(k * (s - 2) + j);
    std::vector<int> u(k), w(k);
    for (long long zc = 0; zc < z_count; ++zc) {
        long long x = zc;
        for (int& zi : z) {
            zi = static_cast<int>(x % q);
            x /= q;
        }
        // z = (z0[0..j-1], z[j..]) with z0 the middle-block tuple
        for (long long uwc = 0; uwc < uw_count; ++uwc) {
            long long y = uwc;
            for (int i = 0; i < k; ++i) {
                u[i] = static_cast<int>(y % q);
                y /= q;
            }
            for (int i = 0; i < k; ++i) {
                w[i] = static_cast<int>(y % q);
                y /= q;
            }
            bool u_zero = std::all_of(u.begin(), u.end(), [](int a) { return a == 0; });
            bool w_zero = std::all_of(w.begin(), w.end(), [](int a) { return a == 0; });
            if (w_zero && !u_zero) continue;  // the dropped codeword type

            Word word(m * s, 0);
            for (int i = 0; i < k; ++i) {
                word[i * s + s - 2] = static_cast<uint8_t>(u[i]);
                word[i * s + s - 1] = static_cast<uint8_t>(w[i]);
            }
            int right0 = k + (with_middle ? 1 : 0);
            if (with_middle)
                for (int d = 0; d < j; ++d)
                    word[k * s + (s - j) + d] = static_cast<uint8_t>(z[d]);
            for (int i = 0; i < k; ++i) {
                int base = (right0 + i) * s;
                word[base] = static_cast<uint8_t>(u[i]);
                word[base + 1] = static_cast<uint8_t>(w[i]);
                for (int d = 0; d < s - 2; ++d)
                    word[base + 2 + d] = static_cast<uint8_t>(z[j + i * (s - 2) + d]);
            }
            code.add_word(word);
        }
    }
    code.validate();
    return code;
}

}  // namespace

CoveringCode code_odd(int q, int s, int k, int j) {
    if (q < 2 || s < 3 || k < 1 || j < 1 || j > s)
        throw std::invalid_argument("code_odd: need q >= 2, s >= 3, k >= 1, 1 <= j <= s");
    return build_modified_code(q, s, k, j, true);
}

CoveringCode code_even(int q, int s, int k) {
    if (q < 2 || s < 3 || k < 1)
        throw std::invalid_argument("code_even: need q >= 2, s >= 3, k >= 1");
    return build_modified_code(q, s, k, 0, false);
}

CoveringCode extend_block(const CoveringCode& code) {
    int m = code.poset.m, s = code.poset.s;
    CoveringCode out(NrtPoset(m + 1, s), code.q, code.radius + s);
    for (const Word& w : code.words) {
        Word ext = w;
        ext.insert(ext.end(), s, 0);
        out.add_word(ext);
    }
    return out;
}

CoveringCode constant_code(int q, int m, int s, int t) {
    if (t < 1 || t > m * s) throw std::invalid_argument("constant_code: t out of range");
    CoveringCode code(NrtPoset(m, s), q, m * s - t);
    for (int sym = 0; sym < q; ++sym)
        code.add_word(Word(m * s, static_cast<uint8_t>(sym)));
    return code;
}

CoveringCode product_code(const OrderedArray& a, const CoveringCode& code) {
    if (!(a.poset == code.poset))
        throw std::invalid_argument("product_code: poset mismatch");
    if (a.t != a.poset.size() - code.radius)
        throw std::invalid_argument("product_code: array strength must equal ms - R");
    if (a.has_wildcards())
        throw std::invalid_argument("product_code: array has uninstantiated wildcards");
    int vq = a.v * code.q;
    if (vq > 64) throw std::invalid_argument("product_code: product alphabet exceeds cap");

    CoveringCode out(code.poset, vq, code.radius);
    int n = code.poset.size();
    for (int r = 0; r < a.rows(); ++r)
        for (const Word& b : code.words) {
            Word word(n);
            for (int i = 0; i < n; ++i)
                word[i] = static_cast<uint8_t>(code.q * a.at(r, i) + b[i]);
            out.add_word(word);
        }
    out.validate();
    return out;
}

void write_code(std::ostream& os, const CoveringCode& code) {
    os << "CODE " << code.q << ' ' << code.poset.m << ' ' << code.poset.s << ' '
       << code.radius << ' ' << code.words.size() << '\n';
    for (const Word& w : code.words) {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i > 0) os << ' ';
            os << static_cast<int>(w[i]);
        }
        os << '\n';
    }
}

CoveringCode read_code(std::istream& is) {
    std::string tag;
    int q, m, s, R;
    size_t size;
    if (!(is >> tag >> q >> m >> s >> R >> size) || tag != "CODE")
        throw std::runtime_error("read_code: bad header");
    CoveringCode code(NrtPoset(m, s), q, R);
    for (size_t i = 0; i < size; ++i) {
        Word w(m * s);
        for (int c = 0; c < m * s; ++c) {
            int x;
            if (!(is >> x)) throw std::runtime_error("read_code: truncated");
            if (x < 0 || x >= q) throw std::runtime_error("read_code: entry out of range");
            w[c] = static_cast<uint8_t>(x);
        }
        code.add_word(w);
    }
    return code;
}

std::string to_string(const CoveringCode& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

}  // namespace oca
