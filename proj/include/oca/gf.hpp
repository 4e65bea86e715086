#ifndef OCA_GF_HPP
#define OCA_GF_HPP

#include <cstdint>
#include <vector>

namespace oca {

// GF(p^e) for small prime powers, elements encoded as integers 0..v-1
// (base-p digit vector of the polynomial representation). For e > 1 the
// field is defined by a fixed monic irreducible polynomial over GF(p),
// the lexicographically least one unless overridden.
class FieldSpec {
  public:
    // Order v must be a prime power <= 64.
    explicit FieldSpec(int v);
    // Explicit defining polynomial, coefficients lowest-degree first,
    // length e+1, leading coefficient 1.
    FieldSpec(int v, const std::vector<int>& defining_poly);

    int order() const { return v_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }

    int add(int a, int b) const;
    int neg(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const;
    int inv(int a) const;  // error on a == 0

  private:
    int v_, p_, e_;
    std::vector<int> mod_;  // defining polynomial, length e_+1
    std::vector<std::vector<int>> mul_table_;

    void build_tables();
    void check_element(int a) const;
};

// Polynomial over a FieldSpec, coefficients lowest-degree first,
// fixed-length representation (high coefficients may be zero).
using Poly = std::vector<int>;

// Evaluate f at alpha.
int poly_eval(const FieldSpec& f, const Poly& poly, int alpha);

// Coefficients c_0..c_{count-1} of f in the basis (x-alpha)^d, computed by
// repeated synthetic division.
std::vector<int> taylor_coefficients(const FieldSpec& f, const Poly& poly,
                                     int alpha, int count);

bool is_prime_power(int v);

}  // namespace oca

#endif
