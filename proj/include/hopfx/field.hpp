#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hopfx {

enum class FieldKind { Rationals, Cyclotomic, PrimeField };

// Value-type description of a coefficient field.  param is the cyclotomic
// conductor n (power basis mod the n-th cyclotomic polynomial) or the prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    unsigned param = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec cyclotomic(unsigned n);
    static FieldSpec prime_field(unsigned p);

    unsigned characteristic() const { return kind == FieldKind::PrimeField ? param : 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

// Fixed data for one cyclotomic field: phi(n) and the monic minimal polynomial
// of the generator, low-degree-first with integer coefficients.
struct CycBasis {
    unsigned n = 0;
    unsigned degree = 0;
    std::vector<mpq_class> modulus;
};

const CycBasis& cyclotomic_basis(unsigned n);
unsigned euler_phi(unsigned n);
bool is_prime_u(unsigned n);

// One exact field element.  Exactly one of the three payloads is active,
// selected by field().kind; all arithmetic is exact and canonicalizing
// (lowest-terms rationals, reduced power basis, residues in [0,p)).
class Scalar {
  public:
    Scalar() : f_(FieldSpec::rationals()), rat_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar integer(const FieldSpec& f, long v);
    static Scalar from_mpq(const FieldSpec& f, const mpq_class& v);
    static Scalar zeta(const FieldSpec& f);
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    // fused this += a*b / this -= a*b; no temporary Scalar is built, which is
    // what keeps the structure-constant accumulation loops affordable
    void addmul(const Scalar& a, const Scalar& b);
    void submul(const Scalar& a, const Scalar& b);
    Scalar inverse() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    // Payload accessors; each asserts the matching field kind.
    const mpq_class& rat_value() const;
    const std::vector<mpq_class>& cyc_coeffs() const;
    long residue() const;

    Scalar embed_into(const FieldSpec& target) const;

  private:
    explicit Scalar(const FieldSpec& f) : f_(f), rat_(0) {}

    FieldSpec f_;
    mpq_class rat_;
    std::vector<mpq_class> cyc_;
    long res_ = 0;

    void check_same_field(const Scalar& o) const;
};

}  // namespace hopfx
