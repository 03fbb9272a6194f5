#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "hopfx/field.hpp"

namespace hopfx {

// Dense univariate polynomial over one of the exact fields.
// Coefficients are stored low degree first with no trailing zeros;
// the zero polynomial has an empty coefficient vector.
class Polynomial {
  public:
    Polynomial() : f_(FieldSpec::rationals()) {}
    explicit Polynomial(const FieldSpec& f) : f_(f) {}

    static Polynomial zero(const FieldSpec& f) { return Polynomial(f); }
    static Polynomial one(const FieldSpec& f);
    static Polynomial x(const FieldSpec& f);
    static Polynomial constant(const Scalar& c);
    static Polynomial from_coeffs(const FieldSpec& f, std::vector<Scalar> coeffs);
    // x^n - 1
    static Polynomial x_pow_minus_one(const FieldSpec& f, unsigned long n);

    const FieldSpec& field() const { return f_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    Scalar coeff(size_t i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& s) const;
    Polynomial operator-() const;
    // (quotient, remainder); divisor must be nonzero
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

    bool operator==(const Polynomial& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const;
    Polynomial derivative() const;
    Scalar eval(const Scalar& at) const;
    bool divides(const Polynomial& g) const;  // *this | g

    std::string str() const;  // human-readable, variable "x"

  private:
    FieldSpec f_;
    std::vector<Scalar> c_;
    void trim();
};

// Monic gcd (gcd(0,0) = 0).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// base^e mod m, exponent as a big integer (e >= 0).
Polynomial poly_pow_mod(const Polynomial& base, const mpz_class& e, const Polynomial& m);

// Monic product of the distinct irreducible factors of f.  Works in
// characteristic 0 and in characteristic p (where vanishing derivatives
// are peeled off via p-th roots).
Polynomial squarefree_part(const Polynomial& f);

struct OrderSearch {
    bool found = false;
    unsigned long n = 0;  // the order when found, else the cap that was swept
};

// Least N with x^N = 1 mod m.  When divisor_hints = B is given, divisors of
// B are tried first (if m divides x^B - 1 the earliest hit is the answer);
// otherwise N = 1..cap is swept one multiply-by-x step at a time.
OrderSearch order_mod_poly(const Polynomial& m, unsigned long cap,
                           std::optional<unsigned long> divisor_hints = std::nullopt);

// Complete factorization over a prime field: (irreducible monic, multiplicity)
// pairs, deterministically ordered by degree then coefficients.
std::vector<std::pair<Polynomial, unsigned>> factor_prime_field(const Polynomial& f);

// Ascending list of the positive divisors of n.
std::vector<unsigned long> divisors_of(unsigned long n);

}  // namespace hopfx
