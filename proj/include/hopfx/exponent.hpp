#pragma once
#include "hopfx/double.hpp"
#include "hopfx/polynomial.hpp"

namespace hopfx {

enum class ExpStatus { Finite, Infinite, Unknown };

// Replayable evidence that the exponent is infinite.  Exactly one payload is
// meaningful, selected by kind.
struct InfinityCertificate {
    std::string kind;  // "skew-primitive" or "u-minpoly-not-squarefree"
    // skew-primitive: a grouplike g and an element x of H with
    // Delta(x) = x (x) 1 + g (x) x, where x lies outside the span of the
    // powers of g (characteristic 0 only)
    Vec grouplike, element;
    // non-squarefree: the minimal polynomial of u in D(H) and the
    // nonconstant gcd(m, m') witnessing a repeated root
    Polynomial u_minpoly, repeated_factor;
};

// The order computation behind a u-route verdict, recomputable from H alone.
struct OrderCertificate {
    Polynomial minpoly;  // of u, left-regular representation of D(H)
    bool squarefree = false;
    std::optional<unsigned long> order;  // multiplicative order of u when found
    unsigned long cap = 0;               // the bound swept when order is absent
    // characteristic p: order = a * p^b with a the lcm of the orders of x
    // modulo the irreducible factors and p^b the least power covering the
    // largest multiplicity
    std::optional<std::pair<unsigned long, unsigned>> char_p_ab;
};

struct ExponentResult {
    ExpStatus status = ExpStatus::Unknown;
    unsigned long value = 0;  // Finite: the exponent
    unsigned long cap = 0;    // Unknown: the search bound that was exhausted
    std::string method;       // "direct", "u", "rproduct", "r21r", "decide"
    std::vector<InfinityCertificate> certificates;
    std::optional<OrderCertificate> order_certificate;
    double elapsed_ms = 0;  // never part of printed reports
};

struct SpectrumReport {
    Polynomial u_minpoly;  // left-regular representation of D(H)
    bool u_squarefree = false;
    bool u_bound_ok = false;          // squarefree part divides x^{2 dim^3} - 1
    unsigned long u_root_order = 0;   // least N with that divisibility (0: none up to the bound)
    // (divisor of u_root_order, number of distinct roots of order dividing it)
    std::vector<std::pair<unsigned long, unsigned>> root_orders;
    Polynomial z_minpoly;  // z = u S(u)
    bool z_bound_ok = false;  // squarefree part divides x^{dim^3} - 1
};

// dim^3 when the semisimple and cosemisimple checks both pass (the exponent
// then divides dim^3, so a divisor sweep is complete), else 4096.
unsigned long default_cap(const HopfAlgebra& h);

// Iterate the Sweedler power maps f_n and report the first n with f_n = eps 1.
// Never certifies infinity.
ExponentResult exponent_direct(const HopfAlgebra& h, unsigned long cap);

// Order of the Drinfeld element through its minimal polynomial in the
// left-regular representation of D(H).
ExponentResult exponent_via_u(const HopfAlgebra& h, unsigned long cap);

// First n with R (I (x) S^2)(R) ... (I (x) S^{2n-2})(R) = 1 (x) 1 in D (x) D.
ExponentResult exponent_via_r_product(const HopfAlgebra& h, unsigned long cap);

// Multiplicative order of R21 R in D (x) D by iterated multiplication.
ExponentResult exponent_via_r21r(const HopfAlgebra& h, unsigned long cap);

// Certificate-driven decision.  Characteristic 0: infinite when a nontrivial
// skew-primitive exists or the minimal polynomial of u has a repeated root
// (all certificates found are returned); otherwise the order search runs and
// a finite hit is cross-checked against the Sweedler power map.
// Characteristic p: always finite, order a * p^b confirmed by powering u.
// Contradictory certificates throw.
ExponentResult decide_exponent(const HopfAlgebra& h, unsigned long cap);

SpectrumReport classify_u_spectrum(const HopfAlgebra& h);

// Re-verify certificates from H alone.
bool replay_skew_primitive(const HopfAlgebra& h, const InfinityCertificate& c);
bool replay_nonsquarefree(const HopfAlgebra& h, const InfinityCertificate& c);

}  // namespace hopfx
