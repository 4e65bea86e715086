#include "oca/bounds.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "oca/constructions.hpp"
#include "oca/gf.hpp"

namespace oca {

namespace {

constexpr long long kValueCap = 4'000'000'000'000'000'000LL;

std::optional<long long> checked_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kValueCap / b) return std::nullopt;
    return a * b;
}

std::optional<long long> checked_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        auto p = checked_mul(r, base);
        if (!p) return std::nullopt;
        r = *p;
    }
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// minimal N with m <= C(N-1, floor(N/2)-1)
int kleitman_spencer_rows(int m) {
    for (int n = 2;; ++n)
        if (binomial(n - 1, n / 2 - 1) >= m) return n;
}

long long tj_rows(int v, int j) {
    return *checked_pow(v, j) - *checked_pow(v, (j + 1) / 2);
}

struct Engine {
    // nullopt = no rule applies at this subquery (dead end, not an error)
    std::map<std::array<int, 5>, std::optional<BoundRecord>> ocan_memo;
    std::map<std::array<int, 5>, std::optional<BoundRecord>> k_memo;

    std::optional<BoundRecord> ocan(int t, int m, int s, int v, int depth);
    std::optional<BoundRecord> k(int q, int m, int s, int R, int depth);

    static std::optional<BoundRecord> pick(std::vector<BoundRecord>& cands) {
        if (cands.empty()) return std::nullopt;
        std::stable_sort(cands.begin(), cands.end(),
                         [](const BoundRecord& a, const BoundRecord& b) {
                             if (a.value != b.value) return a.value < b.value;
                             return a.rule < b.rule;
                         });
        return cands.front();
    }
};

BoundRecord make_ocan(int t, int m, int s, int v, long long value, std::string rule,
                      std::vector<BoundRecord> inputs, bool constructive) {
    return BoundRecord{BoundRecord::Kind::Ocan, t,    m,
                       s,                       v,    value,
                       std::move(rule),         std::move(inputs), constructive};
}

BoundRecord make_k(int R, int m, int s, int q, long long value, std::string rule,
                   std::vector<BoundRecord> inputs, bool constructive) {
    return BoundRecord{BoundRecord::Kind::K, R,    m,
                       s,                    q,    value,
                       std::move(rule),      std::move(inputs), constructive};
}

std::optional<BoundRecord> Engine::ocan(int t, int m, int s, int v, int depth) {
    s = std::min(s, t);  // extra chain length never adds coverage demands
    std::array<int, 5> key{t, m, s, v, depth};
    auto it = ocan_memo.find(key);
    if (it != ocan_memo.end()) return it->second;

    std::vector<BoundRecord> cands;
    auto add = [&](long long value, const char* rule, std::vector<BoundRecord> inputs,
                   bool constructive) {
        cands.push_back(make_ocan(t, m, s, v, value, rule, std::move(inputs), constructive));
    };

    // --- axioms ---
    if (t == 0) {
        add(1, "axiom-empty", {}, true);
    } else if (t == 1) {
        add(v, "axiom-strength1", {}, true);
    } else {
        if (m == 1)
            if (auto p = checked_pow(v, t)) add(*p, "axiom-single-chain", {}, true);
        if (is_prime_power(v) && m >= 2 && m <= v + 1 && s >= 1)
            if (auto p = checked_pow(v, t)) add(*p, "eq1", {}, true);
        if (t == 2 && v == 2 && s == 1 && m >= 2)
            add(kleitman_spencer_rows(m), "eq3", {}, true);
        if (t == 2 && s == 1 && is_prime_power(v) && m >= 2 && m <= v + 1)
            add(static_cast<long long>(v) * v, "bush", {}, true);
        if (t == 2 && is_prime_power(v + 1) && m >= 2 && m <= v + 2)
            add(static_cast<long long>(v + 1) * (v + 1) - 2, "eq4", {}, true);
        if (t >= 3 && is_prime_power(v) && m >= 2 && m <= v + 2)
            add(corollary2_bound(t, v), "corollary2", {}, true);
        if (auto p = checked_pow(v, m * s); p && *p <= (1LL << 22))
            add(*p, "axiom-trivial", {}, true);
    }

    // --- recursive rules ---
    if (depth > 0 && t >= 2) {
        if (t == 2 && s == 2 && m >= 2)
            if (auto sub = ocan(2, m, 1, v, depth - 1))
                add(sub->value, "eq2", {*sub}, sub->constructive);
        if (s == t && t >= 2)
            if (auto sub = ocan(t, m, t - 1, v, depth - 1))
                add(sub->value, "prop2-extend", {*sub}, sub->constructive);
        if (s < t)
            if (auto sub = ocan(t, m, s + 1, v, depth - 1))
                add(sub->value, "prop2-project", {*sub}, sub->constructive);
        if (m + 1 <= 12)
            if (auto sub = ocan(t, m + 1, s, v, depth - 1))
                add(sub->value, "prop2-dropblock", {*sub}, sub->constructive);
        if (v + 1 <= 16)
            if (auto sub = ocan(t, m, s, v + 1, depth - 1))
                add(sub->value - 2, "prop3-fusion", {*sub}, sub->constructive);
        if (t == 3 && s == 3 && v >= 3 && m >= 3) {
            auto a = ocan(3, m, 2, v - 1, depth - 1);
            auto b = ocan(2, m - 1, 1, v - 1, depth - 1);
            auto c = ocan(2, m, 1, v - 1, depth - 1);
            if (a && b && c) {
                long long extra = static_cast<long long>(m) * (v - 1) * (v - 1) + 1;
                add(a->value + m * b->value + c->value + extra, "thm1", {*a, *b, *c},
                    a->constructive && b->constructive && c->constructive);
            }
        }
        if (t + 1 <= 8 && m + 1 <= 12)
            if (auto sub = ocan(t + 1, m + 1, s, v, depth - 1))
                add(sub->value / v, "prop4-derive-block", {*sub}, sub->constructive);
        if (t + 1 <= 8 && s + 1 <= t + 1)
            if (auto sub = ocan(t + 1, m, s + 1, v, depth - 1))
                add(sub->value / v, "prop4-derive-depth", {*sub}, sub->constructive);
        if (m >= 3) {
            // block augmentation: base on m-1 blocks, cross products with T^j
            if (auto base = ocan(t, m - 1, s, v, depth - 1)) {
                std::vector<BoundRecord> inputs{*base};
                std::optional<long long> total = base->value;
                bool constructive = base->constructive;
                for (int j = 2; j <= std::min(2 * s, t) && total; ++j) {
                    auto ing = ocan(t - j, m - 2, s, v, depth - 1);
                    if (!ing) {
                        total = std::nullopt;
                        break;
                    }
                    constructive = constructive && ing->constructive;
                    auto part = checked_mul(ing->value, tj_rows(v, j));
                    if (!part || *total > kValueCap - *part)
                        total = std::nullopt;
                    else
                        total = *total + *part;
                    inputs.push_back(std::move(*ing));
                }
                if (total) add(*total, "thm2", std::move(inputs), constructive);
            }
        }
        if (t == 3 && v == 2 && m % 2 == 0 && m >= 4 && (s == 2 || s == 3)) {
            auto a = ocan(3, m / 2, s, 2, depth - 1);
            auto b = ocan(2, m / 2, 2, 2, depth - 1);
            if (a && b) add(a->value + b->value, "krikorian", {*a, *b}, false);
        }
        if (s >= 2 && m * s <= 12)
            if (auto sub = ocan(t, m * s, 1, v, depth - 1))
                add(sub->value, "trivial-flatten", {*sub}, sub->constructive);
    }

    std::optional<BoundRecord> best = pick(cands);
    ocan_memo.emplace(key, best);
    return best;
}

std::optional<BoundRecord> Engine::k(int q, int m, int s, int R, int depth) {
    std::array<int, 5> key{q, m, s, R, depth};
    auto it = k_memo.find(key);
    if (it != k_memo.end()) return it->second;

    std::vector<BoundRecord> cands;
    auto add = [&](long long value, const char* rule, std::vector<BoundRecord> inputs,
                   bool constructive) {
        cands.push_back(make_k(R, m, s, q, value, rule, std::move(inputs), constructive));
    };

    // --- axioms ---
    if (R >= m * s) {
        add(1, "axiom-whole-space", {}, true);
    } else if (R == 0) {
        if (auto p = checked_pow(q, m * s)) add(*p, "axiom-zero-radius", {}, true);
    } else {
        if (auto p = checked_pow(q, m * s - R)) add(*p, "prop1", {}, true);
        if (m >= 3 && m % 2 == 1 && s >= 3) {
            int kk = (m - 1) / 2;
            int j = (kk + 1) * s - R;
            if (j >= 1 && j <= s) {
                auto hi = checked_pow(q, kk * s + j);
                auto lo = checked_pow(q, kk * (s - 2) + j);
                auto f = checked_pow(q, kk);
                if (hi && lo && f) add(*hi - *lo * (*f - 1), "thm3", {}, true);
            }
            if (R == (kk + 1) * s) {
                auto hi = checked_pow(q, kk * s);
                auto lo = checked_pow(q, kk * (s - 2));
                auto f = checked_pow(q, kk);
                if (hi && lo && f) add(*hi - *lo * (*f - 1), "caseven0", {}, true);
            }
        }
        if (m >= 2 && m % 2 == 0 && s >= 3 && R == (m / 2) * s) {
            int kk = m / 2;
            auto hi = checked_pow(q, kk * s);
            auto lo = checked_pow(q, kk * (s - 2));
            auto f = checked_pow(q, kk);
            if (hi && lo && f) add(*hi - *lo * (*f - 1), "thm4", {}, true);
        }
        int t = m * s - R;
        if (t >= 1 && (t - 1) * q + 1 <= m) add(q, "eq5", {}, true);

        // --- recursive rules ---
        if (depth > 0) {
            if (m >= 2 && R >= s)
                if (auto sub = k(q, m - 1, s, R - s, depth - 1))
                    add(sub->value, "extend-block", {*sub}, sub->constructive);
            if (t >= 1 && t <= 8)
                for (int v = 2; v * 2 <= q; ++v) {
                    if (q % v != 0 || v > 16) continue;
                    auto oc = ocan(t, m, s, v, depth - 1);
                    auto kc = k(q / v, m, s, R, depth - 1);
                    if (!oc || !kc) continue;
                    if (auto prod = checked_mul(oc->value, kc->value))
                        add(*prod, "thm5", {*oc, *kc}, oc->constructive && kc->constructive);
                }
        }
    }

    std::optional<BoundRecord> best = pick(cands);
    k_memo.emplace(key, best);
    return best;
}

}  // namespace

std::string BoundRecord::params_string() const {
    std::ostringstream os;
    if (kind == Kind::Ocan)
        os << "OCAN(" << t_or_R << ',' << m << ',' << s << ',' << v_or_q << ')';
    else
        os << "K(" << v_or_q << ',' << m << ',' << s << ',' << t_or_R << ')';
    return os.str();
}

std::string BoundRecord::trace_string() const {
    if (inputs.empty()) return rule;
    std::string out = rule + "(";
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (i > 0) out += ';';
        out += inputs[i].trace_string();
    }
    return out + ")";
}

BoundRecord best_ocan_upper(int t, int m, int s, int v, int depth) {
    if (t < 0 || t > 8 || m < 1 || m > 12 || v < 2 || v > 16 || s < 1)
        throw std::invalid_argument("best_ocan_upper: parameters outside desk-scale cap");
    if (t > m * std::min(s, t))
        throw std::invalid_argument("best_ocan_upper: strength exceeds poset size");
    Engine engine;
    auto best = engine.ocan(t, m, s, v, depth);
    if (!best) throw std::runtime_error("best_ocan_upper: no rule applies");
    return *best;
}

BoundRecord best_k_upper(int q, int m, int s, int R, int depth) {
    if (q < 2 || q > 64 || m < 1 || m > 12 || s < 1 || s > 8 || R < 0 || R > m * s)
        throw std::invalid_argument("best_k_upper: parameters outside desk-scale cap");
    Engine engine;
    auto best = engine.k(q, m, s, R, depth);
    if (!best) throw std::runtime_error("best_k_upper: no rule applies");
    return *best;
}

namespace {

OrderedArray full_factorial(int v, int m, int s, int t) {
    auto rows = checked_pow(v, m * s);
    if (!rows || *rows > (1LL << 22))
        throw std::runtime_error("materialize: full factorial too large");
    OrderedArray out(NrtPoset(m, s), v, t);
    std::vector<uint8_t> row(m * s, 0);
    for (long long r = 0; r < *rows; ++r) {
        long long x = r;
        for (int c = 0; c < m * s; ++c) {
            row[c] = static_cast<uint8_t>(x % v);
            x /= v;
        }
        out.append_row(row);
    }
    return out;
}

OrderedArray project_to(OrderedArray a, int m, int s) {
    while (a.poset.m > m) a = block_project(a);
    while (a.poset.s > s) a = chain_project(a);
    return a;
}

}  // namespace

OrderedArray materialize_ocan(const BoundRecord& r) {
    if (r.kind != BoundRecord::Kind::Ocan)
        throw std::invalid_argument("materialize_ocan: not an OCAN record");
    int t = r.t_or_R, m = r.m, s = r.s, v = r.v_or_q;
    const std::string& rule = r.rule;

    if (rule == "axiom-empty") {
        OrderedArray out(NrtPoset(m, s), v, 0);
        out.append_row(std::vector<uint8_t>(m * s, 0), std::vector<uint8_t>(m * s, 1));
        return out;
    }
    if (rule == "axiom-strength1") return constant_rows_oca(v, m, s);
    if (rule == "axiom-single-chain") return full_factorial(v, 1, s, t);
    if (rule == "axiom-trivial") return full_factorial(v, m, s, t);
    if (rule == "eq1") return project_to(ooa_rs(FieldSpec(v), t, m), m, s);
    if (rule == "eq3") return kleitman_spencer_ca(m);
    if (rule == "bush") return bush_ca(FieldSpec(v), m);
    if (rule == "eq4") return project_to(fuse(ooa_rs(FieldSpec(v + 1), 2, m)), m, s);
    if (rule == "corollary2") return project_to(corollary2_array(t, v), m, s);
    if (rule == "eq2") return strength2_from_ca(materialize_ocan(r.inputs.at(0)));
    if (rule == "prop2-extend") return chain_extend(materialize_ocan(r.inputs.at(0)));
    if (rule == "prop2-project") return chain_project(materialize_ocan(r.inputs.at(0)));
    if (rule == "prop2-dropblock") return block_project(materialize_ocan(r.inputs.at(0)));
    if (rule == "prop3-fusion") return fuse(materialize_ocan(r.inputs.at(0)));
    if (rule == "thm1")
        return augment_alphabet_s3(materialize_ocan(r.inputs.at(0)),
                                   materialize_ocan(r.inputs.at(1)),
                                   materialize_ocan(r.inputs.at(2)));
    if (rule == "prop4-derive-block") return derive_block(materialize_ocan(r.inputs.at(0)));
    if (rule == "prop4-derive-depth") return derive_depth(materialize_ocan(r.inputs.at(0)));
    if (rule == "thm2") {
        OrderedArray base = materialize_ocan(r.inputs.at(0));
        std::vector<OrderedArray> ingredients;
        for (size_t i = 1; i < r.inputs.size(); ++i) {
            OrderedArray ing = materialize_ocan(r.inputs[i]);
            if (ing.poset.s < s) ing = chain_pad(ing, s);
            ingredients.push_back(std::move(ing));
        }
        return augment_block(base, ingredients);
    }
    if (rule == "trivial-flatten") {
        OrderedArray flat = materialize_ocan(r.inputs.at(0));
        OrderedArray out(NrtPoset(m, s), v, t);
        out.entries = flat.entries;
        out.wildcard = flat.wildcard;
        VerificationReport rep = verify_oca(out);
        if (!rep.pass) throw std::runtime_error("materialize: flattened array failed");
        return out;
    }
    throw std::runtime_error("materialize_ocan: rule '" + rule + "' is not constructive");
}

CoveringCode materialize_k(const BoundRecord& r) {
    if (r.kind != BoundRecord::Kind::K)
        throw std::invalid_argument("materialize_k: not a K record");
    int R = r.t_or_R, m = r.m, s = r.s, q = r.v_or_q;
    const std::string& rule = r.rule;

    if (rule == "axiom-whole-space") {
        CoveringCode code(NrtPoset(m, s), q, m * s);
        code.add_word(Word(m * s, 0));
        return code;
    }
    if (rule == "axiom-zero-radius") {
        auto count = checked_pow(q, m * s);
        if (!count || *count > (1LL << 22))
            throw std::runtime_error("materialize: whole space too large");
        CoveringCode code(NrtPoset(m, s), q, 0);
        Word w(m * s, 0);
        for (long long i = 0; i < *count; ++i) {
            long long x = i;
            for (int c = 0; c < m * s; ++c) {
                w[c] = static_cast<uint8_t>(x % q);
                x /= q;
            }
            code.add_word(w);
        }
        return code;
    }
    if (rule == "prop1") return zero_ideal_code(q, m, s, R);
    if (rule == "thm3") return code_odd(q, s, (m - 1) / 2, ((m - 1) / 2 + 1) * s - R);
    if (rule == "caseven0") return extend_block(code_even(q, s, (m - 1) / 2));
    if (rule == "thm4") return code_even(q, s, m / 2);
    if (rule == "eq5") return constant_code(q, m, s, m * s - R);
    if (rule == "extend-block") return extend_block(materialize_k(r.inputs.at(0)));
    if (rule == "thm5") {
        OrderedArray a = materialize_ocan(r.inputs.at(0));
        if (a.has_wildcards()) a = instantiate_wildcards(a, 0);
        if (a.poset.s < s) a = chain_pad(a, s);
        return product_code(a, materialize_k(r.inputs.at(1)));
    }
    throw std::runtime_error("materialize_k: rule '" + rule + "' is not constructive");
}

namespace {

long long pow_ll(long long b, int e) { return *checked_pow(b, e); }

}  // namespace

std::vector<Table2Row> emit_table2() {
    const std::pair<int, int> alphabets[] = {{2, 2}, {2, 3}, {3, 3}, {4, 2}, {4, 3}};
    std::vector<Table2Row> rows;
    for (auto [v, q] : alphabets)
        for (int s = 3; s <= 5; ++s) {
            long long vq = static_cast<long long>(v) * q;
            Table2Row row;
            row.v = v;
            row.q = q;
            row.m = 3;
            row.s = s;
            row.R = 2 * s - 1;
            row.old_value = pow_ll(vq, s + 1) - pow_ll(vq, s - 1) * (vq - 1);
            row.new_value =
                pow_ll(v, s + 1) * (pow_ll(q, s + 1) - pow_ll(q, s - 1) * (q - 1));
            row.old_tag = "caseodd";
            row.new_tag = "corollary7-1";
            rows.push_back(row);
        }
    for (auto [v, q] : alphabets)
        for (int s = 3; s <= 5; ++s) {
            long long vq = static_cast<long long>(v) * q;
            Table2Row row;
            row.v = v;
            row.q = q;
            row.m = 2;
            row.s = s;
            row.R = s;
            row.old_value = pow_ll(vq, s) - pow_ll(vq, s - 2) * (vq - 1);
            row.new_value = pow_ll(v, s) * (pow_ll(q, s) - pow_ll(q, s - 2) * (q - 1));
            row.old_tag = "casevencai";
            row.new_tag = "corollary7-2";
            rows.push_back(row);
        }
    return rows;
}

namespace {

long long modified_code_size(int q, int s, int k, int j) {
    return pow_ll(q, k * s + j) - pow_ll(q, k * (s - 2) + j) * (pow_ll(q, k) - 1);
}

}  // namespace

std::vector<Table3Row> emit_table3() {
    // (q, m, s, R, prior, tag); prior bounds are a static annotation
    struct Spec {
        int q, m, s, R;
        long long prior;
        const char* tag;
    };
    const Spec specs[] = {
        {2, 2, 3, 3, 8, "casevencai"}, {2, 2, 4, 4, 12, "casevencai"},
        {2, 2, 5, 5, 32, "casevencai"}, {2, 3, 3, 3, 64, "cases"},
        {2, 3, 3, 4, 16, "thm3"},       {2, 3, 3, 5, 8, "caseodd"},
        {2, 3, 3, 6, 8, "caseven0"},    {2, 3, 4, 7, 16, "caseodd"},
        {2, 3, 4, 8, 16, "caseven0"},   {2, 4, 3, 6, 24, "thm4"},
        {2, 4, 4, 8, 112, "thm4"},
    };
    std::vector<Table3Row> rows;
    for (const Spec& sp : specs) {
        Table3Row row{sp.q, sp.m, sp.s, sp.R, sp.prior, 0, sp.tag};
        if (row.tag == "casevencai" || row.tag == "thm4") {
            row.new_value = modified_code_size(sp.q, sp.s, sp.m / 2, 0);
        } else if (row.tag == "caseven0") {
            row.new_value = modified_code_size(sp.q, sp.s, (sp.m - 1) / 2, 0);
        } else {  // odd-block family: R = (k+1)s - j
            int k = (sp.m - 1) / 2;
            int j = (k + 1) * sp.s - sp.R;
            row.new_value = modified_code_size(sp.q, sp.s, k, j);
        }
        rows.push_back(row);
    }
    return rows;
}

CoveringCode materialize_table3_row(const Table3Row& row) {
    if (row.tag == "casevencai" || row.tag == "thm4") return code_even(row.q, row.s, row.m / 2);
    if (row.tag == "caseven0") return extend_block(code_even(row.q, row.s, (row.m - 1) / 2));
    int k = (row.m - 1) / 2;
    int j = (k + 1) * row.s - row.R;
    return code_odd(row.q, row.s, k, j);
}

}  // namespace oca
