#include "oca/gf.hpp"

#include <stdexcept>

namespace oca {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Factor v = p^e with p prime; returns false if v is not a prime power.
bool factor_prime_power(int v, int& p, int& e) {
    if (v < 2) return false;
    for (int cand = 2; cand <= v; ++cand) {
        if (v % cand != 0) continue;
        p = cand;
        e = 0;
        int x = v;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        return x == 1 && is_prime(p);
    }
    return false;
}

std::vector<int> digits(int a, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && a > 0; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

// Remainder of a mod b over GF(p), coefficients lowest-degree first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    while (db > 0 && b[db] == 0) --db;
    for (int da = static_cast<int>(a.size()) - 1; da >= db; --da) {
        if (a[da] == 0) continue;
        // b is monic in all our uses
        int c = a[da];
        for (int i = 0; i <= db; ++i) {
            int idx = da - db + i;
            a[idx] = ((a[idx] - c * b[i]) % p + p * p) % p;
        }
    }
    a.resize(db);
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), mod, p);
}

bool is_irreducible(const std::vector<int>& f, int p) {
    int e = static_cast<int>(f.size()) - 1;
    if (f[0] == 0) return false;  // divisible by x
    // trial division by all monic polynomials of degree 1..e/2
    for (int d = 1; 2 * d <= e; ++d) {
        int n_monic = 1;
        for (int i = 0; i < d; ++i) n_monic *= p;
        for (int code = 0; code < n_monic; ++code) {
            std::vector<int> g = digits(code, p, d);
            g.push_back(1);
            std::vector<int> r = poly_mod(f, g, p);
            bool zero = true;
            for (int c : r)
                if (c != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

std::vector<int> least_irreducible(int p, int e) {
    int pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    for (int code = 0; code < pe; ++code) {
        std::vector<int> f = digits(code, p, e);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("least_irreducible: none found");
}

}  // namespace

FieldSpec::FieldSpec(int v) : v_(v) {
    if (!factor_prime_power(v, p_, e_) || v > 64)
        throw std::invalid_argument("FieldSpec: order must be a prime power <= 64");
    if (e_ > 1) mod_ = least_irreducible(p_, e_);
    build_tables();
}

FieldSpec::FieldSpec(int v, const std::vector<int>& defining_poly) : v_(v) {
    if (!factor_prime_power(v, p_, e_) || v > 64)
        throw std::invalid_argument("FieldSpec: order must be a prime power <= 64");
    if (e_ == 1)
        throw std::invalid_argument("FieldSpec: prime field takes no defining polynomial");
    if (static_cast<int>(defining_poly.size()) != e_ + 1 || defining_poly[e_] != 1)
        throw std::invalid_argument("FieldSpec: defining polynomial must be monic of degree e");
    if (!is_irreducible(defining_poly, p_))
        throw std::invalid_argument("FieldSpec: defining polynomial is reducible");
    mod_ = defining_poly;
    build_tables();
}

void FieldSpec::build_tables() {
    mul_table_.assign(v_, std::vector<int>(v_, 0));
    for (int a = 0; a < v_; ++a)
        for (int b = 0; b < v_; ++b) {
            if (e_ == 1) {
                mul_table_[a][b] = (a * b) % p_;
            } else {
                std::vector<int> pa = digits(a, p_, e_);
                std::vector<int> pb = digits(b, p_, e_);
                mul_table_[a][b] = undigits(poly_mul_mod(pa, pb, mod_, p_), p_);
            }
        }
}

void FieldSpec::check_element(int a) const {
    if (a < 0 || a >= v_) throw std::invalid_argument("FieldSpec: element out of range");
}

int FieldSpec::add(int a, int b) const {
    check_element(a);
    check_element(b);
    if (e_ == 1) return (a + b) % p_;
    std::vector<int> da = digits(a, p_, e_);
    std::vector<int> db = digits(b, p_, e_);
    for (int i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da, p_);
}

int FieldSpec::neg(int a) const {
    check_element(a);
    if (e_ == 1) return (p_ - a) % p_;
    std::vector<int> da = digits(a, p_, e_);
    for (int i = 0; i < e_; ++i) da[i] = (p_ - da[i]) % p_;
    return undigits(da, p_);
}

int FieldSpec::mul(int a, int b) const {
    check_element(a);
    check_element(b);
    return mul_table_[a][b];
}

int FieldSpec::inv(int a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("FieldSpec: inverse of zero");
    for (int b = 1; b < v_; ++b)
        if (mul_table_[a][b] == 1) return b;
    throw std::logic_error("FieldSpec: no inverse found");
}

int poly_eval(const FieldSpec& f, const Poly& poly, int alpha) {
    int acc = 0;
    for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        acc = f.add(f.mul(acc, alpha), poly[i]);
    return acc;
}

std::vector<int> taylor_coefficients(const FieldSpec& f, const Poly& poly,
                                     int alpha, int count) {
    if (count < 0 || count > static_cast<int>(poly.size()))
        throw std::invalid_argument("taylor_coefficients: count out of range");
    // Repeated synthetic division by (x - alpha); each remainder is the
    // next coefficient in the (x - alpha)^d basis.
    std::vector<int> work = poly;
    std::vector<int> out;
    out.reserve(count);
    for (int d = 0; d < count; ++d) {
        int rem = 0;
        for (int i = static_cast<int>(work.size()) - 1; i >= 0; --i) {
            int next = f.add(work[i], f.mul(rem, alpha));
            work[i] = rem;
            rem = next;
        }
        out.push_back(rem);
        if (!work.empty()) work.pop_back();  // quotient sits at indices 0..n-1
    }
    return out;
}

bool is_prime_power(int v) {
    int p, e;
    return factor_prime_power(v, p, e);
}

}  // namespace oca
