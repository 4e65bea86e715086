#include "oca/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oca {

namespace {

long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < std::min(k, n - k); ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

void require_verified(const OrderedArray& a, const char* who) {
    OrderedArray inst = a.has_wildcards() ? instantiate_wildcards(a, 0) : a;
    if (!verify_oca(inst).pass)
        throw std::runtime_error(std::string(who) + ": input fails its own verification");
}

OrderedArray certify(OrderedArray a, const char* who) {
    if (!verify_oca(a).pass)
        throw std::runtime_error(std::string(who) + ": output fails verification");
    return a;
}

}  // namespace

OrderedArray ooa_rs(const FieldSpec& field, int t, int m) {
    int v = field.order();
    if (t < 2) throw std::invalid_argument("ooa_rs: t >= 2 required");
    if (m < 2 || m > v + 1) throw std::invalid_argument("ooa_rs: 2 <= m <= v+1 required");

    OrderedArray a(NrtPoset(m, t), v, t);
    long long n_rows = pow_ll(v, t);
    for (long long code = 0; code < n_rows; ++code) {
        Poly f(t);
        long long x = code;
        for (int d = 0; d < t; ++d) {
            f[d] = static_cast<int>(x % v);
            x /= v;
        }
        std::vector<uint8_t> row(m * t);
        int finite_blocks = std::min(m, v);
        for (int i = 0; i < finite_blocks; ++i) {
            std::vector<int> c = taylor_coefficients(field, f, i, t);
            // height t holds c_0, height 1 holds c_{t-1}
            for (int d = 0; d < t; ++d) row[i * t + (t - 1 - d)] = static_cast<uint8_t>(c[d]);
        }
        if (m == v + 1) {
            // leading coefficient on top
            for (int d = 0; d < t; ++d) row[v * t + d] = static_cast<uint8_t>(f[d]);
        }
        a.append_row(row);
    }
    return certify(std::move(a), "ooa_rs");
}

OrderedArray chain_extend(const OrderedArray& a) {
    if (a.poset.m < 2) throw std::invalid_argument("chain_extend: m >= 2 required");
    if (a.poset.s != a.t - 1)
        throw std::invalid_argument("chain_extend: chain length must be t-1");
    require_verified(a, "chain_extend");

    int m = a.poset.m, s = a.poset.s;
    OrderedArray out(NrtPoset(m, s + 1), a.v, a.t, a.lambda);
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<uint8_t> row(m * (s + 1));
        for (int i = 0; i < m; ++i) {
            int next = (i + 1) % m;
            row[i * (s + 1)] = a.at(r, next * s + s - 1);  // top of next block
            for (int h = 0; h < s; ++h) row[i * (s + 1) + 1 + h] = a.at(r, i * s + h);
        }
        out.append_row(row);
    }
    return certify(std::move(out), "chain_extend");
}

OrderedArray chain_project(const OrderedArray& a) {
    if (a.poset.s < 2) throw std::invalid_argument("chain_project: s must exceed 1");
    int m = a.poset.m, s = a.poset.s;
    OrderedArray out(NrtPoset(m, s - 1), a.v, a.t, a.lambda);
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<uint8_t> row, mask;
        for (int i = 0; i < m; ++i)
            for (int h = 1; h < s; ++h) {
                row.push_back(a.at(r, i * s + h));
                mask.push_back(a.is_wildcard(r, i * s + h) ? 1 : 0);
            }
        out.append_row(row, mask);
    }
    if (!out.has_wildcards()) return certify(std::move(out), "chain_project");
    return out;
}

OrderedArray chain_pad(const OrderedArray& a, int new_s) {
    if (new_s < a.poset.s) throw std::invalid_argument("chain_pad: chain may only grow");
    if (a.t > a.poset.s)
        throw std::invalid_argument("chain_pad: strength must not exceed old chain length");
    int m = a.poset.m, s = a.poset.s, pad = new_s - s;
    OrderedArray out(NrtPoset(m, new_s), a.v, a.t, a.lambda);
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<uint8_t> row;
        for (int i = 0; i < m; ++i) {
            row.insert(row.end(), pad, 0);
            for (int h = 0; h < s; ++h) row.push_back(a.at(r, i * s + h));
        }
        out.append_row(row);
    }
    return certify(std::move(out), "chain_pad");
}

OrderedArray block_project(const OrderedArray& a) {
    if (a.poset.m < 2) throw std::invalid_argument("block_project: m must exceed 1");
    int m = a.poset.m, s = a.poset.s;
    OrderedArray out(NrtPoset(m - 1, s), a.v, a.t, a.lambda);
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<uint8_t> row(a.entries.begin() + r * m * s,
                                 a.entries.begin() + r * m * s + (m - 1) * s);
        std::vector<uint8_t> mask(a.wildcard.begin() + r * m * s,
                                  a.wildcard.begin() + r * m * s + (m - 1) * s);
        out.append_row(row, mask);
    }
    if (!out.has_wildcards()) return certify(std::move(out), "block_project");
    return out;
}

OrderedArray strength2_from_ca(const OrderedArray& ca) {
    if (ca.poset.s != 1) throw std::invalid_argument("strength2_from_ca: input must have s = 1");
    int m = ca.poset.m;
    if (m < 2) throw std::invalid_argument("strength2_from_ca: m >= 2 required");
    require_verified(ca, "strength2_from_ca");

    OrderedArray out(NrtPoset(m, 2), ca.v, 2, ca.lambda);
    for (int r = 0; r < ca.rows(); ++r) {
        std::vector<uint8_t> row(2 * m);
        for (int k = 0; k < m; ++k) {
            row[2 * k] = ca.at(r, k);                // bottom
            row[2 * k + 1] = ca.at(r, (k + 1) % m);  // top
        }
        out.append_row(row);
    }
    return certify(std::move(out), "strength2_from_ca");
}

OrderedArray kleitman_spencer_ca(int m) {
    if (m < 1) throw std::invalid_argument("kleitman_spencer_ca: m >= 1 required");
    int n = 2;
    while (binomial(n - 1, n / 2 - 1) < m) ++n;

    int subset_size = n / 2;
    OrderedArray out(NrtPoset(m, 1), 2, m >= 2 ? 2 : 1);
    std::vector<std::vector<uint8_t>> columns;
    // choose subset_size-1 rows from {2..n}, lexicographically
    std::vector<int> pick(subset_size - 1);
    auto emit = [&]() {
        std::vector<uint8_t> col(n, 0);
        col[0] = 1;  // row 1 always in
        for (int r : pick) col[r - 1] = 1;
        columns.push_back(col);
    };
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (static_cast<int>(columns.size()) == m) return;
        if (depth == subset_size - 1) {
            emit();
            return;
        }
        for (int r = start; r <= n; ++r) {
            pick[depth] = r;
            self(self, r + 1, depth + 1);
            if (static_cast<int>(columns.size()) == m) return;
        }
    };
    if (subset_size == 1)
        emit();
    else
        rec(rec, 2, 0);

    for (int r = 0; r < n; ++r) {
        std::vector<uint8_t> row(m);
        for (int c = 0; c < m; ++c) row[c] = columns[c][r];
        out.append_row(row);
    }
    if (m >= 2 && !verify_ca(out).pass)
        throw std::runtime_error("kleitman_spencer_ca: output fails verification");
    return out;
}

OrderedArray bush_ca(const FieldSpec& field, int m) {
    int v = field.order();
    if (m < 2 || m > v + 1) throw std::invalid_argument("bush_ca: 2 <= m <= v+1 required");
    // rows (a,b), column i: a*alpha_i + b; the optional extra column is a
    OrderedArray out(NrtPoset(m, 1), v, 2);
    for (int a = 0; a < v; ++a)
        for (int b = 0; b < v; ++b) {
            std::vector<uint8_t> row(m);
            for (int i = 0; i < std::min(m, v); ++i)
                row[i] = static_cast<uint8_t>(field.add(field.mul(a, i), b));
            if (m == v + 1) row[v] = static_cast<uint8_t>(a);
            out.append_row(row);
        }
    if (!verify_ca(out).pass) throw std::runtime_error("bush_ca: output fails verification");
    return out;
}

OrderedArray fuse(const OrderedArray& a) {
    if (a.rows() < 2) throw std::invalid_argument("fuse: at least two rows required");
    if (a.v < 2) throw std::invalid_argument("fuse: alphabet must have at least two symbols");
    require_verified(a, "fuse");

    int v_in = a.v, cols = a.cols();
    OrderedArray out(a.poset, v_in - 1, a.t, a.lambda);
    // per-column permutation: row 0 -> v_in-1, row 1 -> v_in-2 where distinct,
    // remaining symbols take the smallest free targets in increasing order
    std::vector<std::vector<int>> perm(cols, std::vector<int>(v_in, -1));
    for (int c = 0; c < cols; ++c) {
        std::vector<bool> used(v_in, false);
        int g = a.at(0, c), h = a.at(1, c);
        perm[c][g] = v_in - 1;
        used[v_in - 1] = true;
        if (h != g) {
            perm[c][h] = v_in - 2;
            used[v_in - 2] = true;
        }
        int next = 0;
        for (int sym = 0; sym < v_in; ++sym) {
            if (perm[c][sym] >= 0) continue;
            while (used[next]) ++next;
            perm[c][sym] = next;
            used[next] = true;
        }
    }
    for (int r = 2; r < a.rows(); ++r) {
        std::vector<uint8_t> row(cols);
        for (int c = 0; c < cols; ++c) {
            int mapped = perm[c][a.at(r, c)];
            if (mapped == v_in - 1) mapped = v_in - 2;  // merge top two symbols
            row[c] = static_cast<uint8_t>(mapped);
        }
        out.append_row(row);
    }
    return certify(std::move(out), "fuse");
}

OrderedArray augment_alphabet_s3(const OrderedArray& a, const OrderedArray& b,
                                 const OrderedArray& c) {
    int m = a.poset.m;
    int v = a.v + 1;  // 0 becomes the augmenting symbol
    if (m < 3 || v < 3) throw std::invalid_argument("augment_alphabet_s3: m >= 3, v >= 3");
    if (a.poset.s != 2 || a.t != 3)
        throw std::invalid_argument("augment_alphabet_s3: a must be an OCA(M;3,m,2,v-1)");
    if (b.poset.s != 1 || b.t != 2 || b.poset.m != m - 1 || b.v != a.v)
        throw std::invalid_argument("augment_alphabet_s3: b must be a CA(M';2,m-1,v-1)");
    if (c.poset.s != 1 || c.t != 2 || c.poset.m != m || c.v != a.v)
        throw std::invalid_argument("augment_alphabet_s3: c must be a CA(M'';2,m,v-1)");
    require_verified(a, "augment_alphabet_s3");

    OrderedArray stacked(NrtPoset(m, 2), v, 3);
    auto shifted = [](uint8_t x) { return static_cast<uint8_t>(x + 1); };

    // A': the strength-3 ingredient remapped to 1..v-1
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<uint8_t> row(2 * m);
        for (int col = 0; col < 2 * m; ++col) row[col] = shifted(a.at(r, col));
        stacked.append_row(row);
    }

    // B: m stacked copies of the strength-2 OCA made from b, a zero block
    // inserted at each position in turn
    OrderedArray b2 = strength2_from_ca(b);
    for (int zero_pos = 0; zero_pos < m; ++zero_pos) {
        for (int r = 0; r < b2.rows(); ++r) {
            std::vector<uint8_t> row(2 * m, 0);
            int src = 0;
            for (int blk = 0; blk < m; ++blk) {
                if (blk == zero_pos) continue;
                row[2 * blk] = shifted(b2.at(r, 2 * src));
                row[2 * blk + 1] = shifted(b2.at(r, 2 * src + 1));
                ++src;
            }
            stacked.append_row(row);
        }
    }

    // C: c's columns on the block tops, zeros below
    for (int r = 0; r < c.rows(); ++r) {
        std::vector<uint8_t> row(2 * m, 0);
        for (int blk = 0; blk < m; ++blk) row[2 * blk + 1] = shifted(c.at(r, blk));
        stacked.append_row(row);
    }

    // D: block-diagonal (0,y) against (x,0) fill, one closing zero row
    int w = v - 1;
    for (int diag = 0; diag < m; ++diag)
        for (int r = 0; r < w * w; ++r) {
            std::vector<uint8_t> row(2 * m);
            for (int blk = 0; blk < m; ++blk) {
                if (blk == diag) {
                    row[2 * blk] = 0;
                    row[2 * blk + 1] = static_cast<uint8_t>(1 + r / w);
                } else {
                    row[2 * blk] = static_cast<uint8_t>(1 + r % w);
                    row[2 * blk + 1] = 0;
                }
            }
            stacked.append_row(row);
        }
    stacked.append_row(std::vector<uint8_t>(2 * m, 0));

    return chain_extend(stacked);  // verifies both the s=2 array and the result
}

OrderedArray derive_block(const OrderedArray& a) {
    if (a.poset.m < 2) throw std::invalid_argument("derive_block: m must exceed 1");
    if (a.t < 1) throw std::invalid_argument("derive_block: strength must be positive");
    require_verified(a, "derive_block");

    int cols = a.cols(), s = a.poset.s;
    std::vector<long long> freq(a.v, 0);
    for (int r = 0; r < a.rows(); ++r) ++freq[a.at(r, cols - 1)];
    int alpha = static_cast<int>(std::min_element(freq.begin(), freq.end()) - freq.begin());

    OrderedArray out(NrtPoset(a.poset.m - 1, s), a.v, a.t - 1, a.lambda);
    for (int r = 0; r < a.rows(); ++r) {
        if (a.at(r, cols - 1) != alpha) continue;
        std::vector<uint8_t> row(a.entries.begin() + r * cols,
                                 a.entries.begin() + r * cols + cols - s);
        out.append_row(row);
    }
    while (out.t >= 1 && out.poset.s > out.t) out = chain_project(out);
    return certify(std::move(out), "derive_block");
}

OrderedArray derive_depth(const OrderedArray& a) {
    int m = a.poset.m, s1 = a.poset.s;
    if (s1 < 2) throw std::invalid_argument("derive_depth: chain length must exceed 1");
    if (a.t < 1) throw std::invalid_argument("derive_depth: strength must be positive");
    require_verified(a, "derive_depth");

    int cols = a.cols();
    std::vector<long long> freq(a.v, 0);
    for (int r = 0; r < a.rows(); ++r) ++freq[a.at(r, cols - 1)];
    int beta = static_cast<int>(std::min_element(freq.begin(), freq.end()) - freq.begin());

    OrderedArray out(NrtPoset(m, s1 - 1), a.v, a.t - 1, a.lambda);
    for (int r = 0; r < a.rows(); ++r) {
        if (a.at(r, cols - 1) != beta) continue;
        std::vector<uint8_t> row;
        for (int blk = 0; blk < m; ++blk)
            for (int h = 0; h < s1; ++h) {
                if (blk < m - 1 && h == 0) continue;       // bottom of early blocks
                if (blk == m - 1 && h == s1 - 1) continue; // top of last block
                row.push_back(a.at(r, blk * s1 + h));
            }
        out.append_row(row);
    }
    while (out.t >= 1 && out.poset.s > out.t) out = chain_project(out);
    return certify(std::move(out), "derive_depth");
}

OrderedArray build_tj(int v, int s, int j) {
    if (j < 2 || j > 2 * s) throw std::invalid_argument("build_tj: 2 <= j <= 2s required");
    if (v < 2) throw std::invalid_argument("build_tj: v >= 2 required");

    OrderedArray out(NrtPoset(2, s), v, std::min(j, 2 * s));
    long long n_tuples = pow_ll(v, j);
    std::vector<int> x(j);
    for (long long code = 0; code < n_tuples; ++code) {
        long long y = code;
        for (int i = j - 1; i >= 0; --i) {
            x[i] = static_cast<int>(y % v);
            y /= v;
        }
        // skip tuples whose leading half mirrors the trailing half
        bool mirrored = true;
        for (int i = 0; i < j / 2; ++i)
            if (x[i] != x[j - 1 - i]) {
                mirrored = false;
                break;
            }
        if (mirrored) continue;

        std::vector<uint8_t> row(2 * s, 0);
        std::vector<uint8_t> mask(2 * s, 1);
        for (int i = 1; i <= std::min(j, s); ++i) {
            row[s - i] = static_cast<uint8_t>(x[i - 1]);  // a_{s-i+1} = x_i
            mask[s - i] = 0;
            row[2 * s - i] = static_cast<uint8_t>(x[j - i]);  // a_{2s-i+1} = x_{j-i+1}
            mask[2 * s - i] = 0;
        }
        out.append_row(row, mask);
    }
    return out;
}

OrderedArray augment_block(const OrderedArray& a,
                           const std::vector<OrderedArray>& ingredients) {
    int t = a.t, m = a.poset.m, s = a.poset.s, v = a.v;
    if (s > t) throw std::invalid_argument("augment_block: requires s <= t");
    int k = std::min(2 * s, t);
    if (static_cast<int>(ingredients.size()) != k - 1)
        throw std::invalid_argument("augment_block: need one ingredient per j = 2..min(2s,t)");
    require_verified(a, "augment_block");
    for (int j = 2; j <= k; ++j) {
        const OrderedArray& ing = ingredients[j - 2];
        if (ing.poset.m != m - 1 || ing.poset.s != s || ing.v != v || ing.t != t - j)
            throw std::invalid_argument("augment_block: ingredient parameter mismatch at j=" +
                                        std::to_string(j));
        require_verified(ing, "augment_block");
    }

    OrderedArray out(NrtPoset(m + 1, s), v, t, a.lambda);
    // A': duplicate the last block
    for (int r = 0; r < a.rows(); ++r) {
        std::vector<uint8_t> row(a.entries.begin() + r * m * s,
                                 a.entries.begin() + (r + 1) * m * s);
        std::vector<uint8_t> last_block(row.end() - s, row.end());
        row.insert(row.end(), last_block.begin(), last_block.end());
        out.append_row(row);
    }
    // C^j: ingredient rows crossed with T^j rows, wildcards filled 0
    for (int j = 2; j <= k; ++j) {
        OrderedArray ing = instantiate_wildcards(ingredients[j - 2], 0);
        OrderedArray tj = instantiate_wildcards(build_tj(v, s, j), 0);
        for (int ri = 0; ri < ing.rows(); ++ri)
            for (int rt = 0; rt < tj.rows(); ++rt) {
                std::vector<uint8_t> row(ing.entries.begin() + ri * (m - 1) * s,
                                         ing.entries.begin() + (ri + 1) * (m - 1) * s);
                row.insert(row.end(), tj.entries.begin() + rt * 2 * s,
                           tj.entries.begin() + (rt + 1) * 2 * s);
                out.append_row(row);
            }
    }
    return certify(std::move(out), "augment_block");
}

long long corollary2_bound(int t, int v) {
    if (t < 3) throw std::invalid_argument("corollary2_bound: t >= 3 required");
    if (!is_prime_power(v)) throw std::invalid_argument("corollary2_bound: v must be a prime power");
    long long total = pow_ll(v, t);
    for (int j = 2; j <= t; ++j)
        total += pow_ll(v, t - j) * (pow_ll(v, j) - pow_ll(v, (j + 1) / 2));
    return total;
}

OrderedArray constant_rows_oca(int v, int m, int s) {
    OrderedArray out(NrtPoset(m, s), v, 1);
    for (int sym = 0; sym < v; ++sym)
        out.append_row(std::vector<uint8_t>(m * s, static_cast<uint8_t>(sym)));
    return certify(std::move(out), "constant_rows_oca");
}

OrderedArray corollary2_array(int t, int v) {
    if (t < 3) throw std::invalid_argument("corollary2_array: t >= 3 required");
    FieldSpec field(v);
    OrderedArray base = ooa_rs(field, t, v + 1);  // OCA(v^t; t, v+1, t, v)

    std::vector<OrderedArray> ingredients;
    for (int j = 2; j <= t; ++j) {
        int u = t - j;  // ingredient strength, over v blocks of length t
        if (u == 0) {
            OrderedArray one(NrtPoset(v, t), v, 0);
            one.append_row(std::vector<uint8_t>(v * t, 0),
                           std::vector<uint8_t>(v * t, 1));
            ingredients.push_back(std::move(one));
        } else if (u == 1) {
            ingredients.push_back(constant_rows_oca(v, v, t));
        } else if (u == 2) {
            OrderedArray oca2 = strength2_from_ca(bush_ca(field, v));
            ingredients.push_back(chain_pad(oca2, t));
        } else {
            ingredients.push_back(chain_pad(ooa_rs(field, u, v), t));
        }
    }
    return augment_block(base, ingredients);
}

}  // namespace oca
