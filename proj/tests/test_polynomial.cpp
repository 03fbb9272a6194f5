#include <doctest.h>

#include "hopfx/polynomial.hpp"

using namespace hopfx;

namespace {

Polynomial qpoly(std::initializer_list<long> coeffs_low_first) {
    auto Q = FieldSpec::rationals();
    std::vector<Scalar> c;
    for (long v : coeffs_low_first) c.push_back(Scalar::integer(Q, v));
    return Polynomial::from_coeffs(Q, std::move(c));
}

Polynomial fppoly(unsigned p, std::initializer_list<long> coeffs_low_first) {
    auto F = FieldSpec::prime_field(p);
    std::vector<Scalar> c;
    for (long v : coeffs_low_first) c.push_back(Scalar::integer(F, v));
    return Polynomial::from_coeffs(F, std::move(c));
}

}  // namespace

TEST_CASE("polynomial ring basics") {
    auto Q = FieldSpec::rationals();
    Polynomial a = qpoly({1, 2, 1});  // (x+1)^2
    Polynomial b = qpoly({1, 1});
    CHECK(a.degree() == 2);
    CHECK((b * b) == a);
    auto [q, r] = a.divmod(b);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(b.divides(a));
    CHECK_FALSE(qpoly({1, 0, 1}).divides(a));
    CHECK(a.eval(Scalar::integer(Q, 2)) == Scalar::integer(Q, 9));
    CHECK(qpoly({-1, 0, 0, 1}).str() == "x^3 - 1");
    CHECK(qpoly({0}).str() == "0");
    CHECK(Polynomial::x_pow_minus_one(Q, 3) == qpoly({-1, 0, 0, 1}));
    CHECK(qpoly({2, -3}).monic().str() == "x - 2/3");
    CHECK_THROWS(a.divmod(Polynomial::zero(Q)));
}

TEST_CASE("gcd and derivative") {
    Polynomial f = qpoly({1, 1}) * qpoly({1, 1}) * qpoly({-1, 1});
    CHECK(poly_gcd(f, f.derivative()) == qpoly({1, 1}));
    CHECK(poly_gcd(qpoly({-1, 0, 1}), qpoly({1, 1})) == qpoly({1, 1}));
    CHECK(poly_gcd(Polynomial::zero(FieldSpec::rationals()), qpoly({2, 4})).str() == "x + 1/2");
    CHECK(qpoly({5, 3, 0, 2}).derivative() == qpoly({3, 0, 6}));
}

TEST_CASE("squarefree part in characteristic zero") {
    // x^2 -> x
    CHECK(squarefree_part(qpoly({0, 0, 1})) == qpoly({0, 1}));
    // (x-1)^2 (x+1) -> (x-1)(x+1)
    Polynomial f = qpoly({-1, 1}) * qpoly({-1, 1}) * qpoly({1, 1});
    CHECK(squarefree_part(f) == qpoly({-1, 0, 1}));
    // already squarefree stays put
    CHECK(squarefree_part(qpoly({-2, 0, 1})) == qpoly({-2, 0, 1}));
    CHECK_THROWS(squarefree_part(Polynomial::zero(FieldSpec::rationals())));
}

TEST_CASE("squarefree part in characteristic p") {
    // x^3 - 1 = (x-1)^3 over F_3; expanding (x-1)^3 = x^3 - 3x^2 + 3x - 1 = x^3 - 1 mod 3
    Polynomial f = fppoly(3, {-1, 0, 0, 1});
    CHECK(squarefree_part(f) == fppoly(3, {-1, 1}));
    // vanishing derivative: x^6 + 1 = (x^2+1)^3 over F_3, and x^2+1 has no root mod 3
    Polynomial g = fppoly(3, {1, 0, 0, 0, 0, 0, 1});
    CHECK(squarefree_part(g) == fppoly(3, {1, 0, 1}));
    // mixed multiplicities: x^2 (x+1)^3 over F_3
    Polynomial h = fppoly(3, {0, 0, 1}) * fppoly(3, {1, 1}) * fppoly(3, {1, 1}) * fppoly(3, {1, 1});
    Polynomial s = squarefree_part(h);
    CHECK(s == (fppoly(3, {0, 1}) * fppoly(3, {1, 1})).monic());
    // p = 2 with a 4th power: (x+1)^4 = x^4 + 1 over F_2
    CHECK(squarefree_part(fppoly(2, {1, 0, 0, 0, 1})) == fppoly(2, {1, 1}));
}

TEST_CASE("order searches") {
    auto Q = FieldSpec::rationals();
    // x - 1 has order 1
    auto r = order_mod_poly(qpoly({-1, 1}), 10);
    CHECK(r.found);
    CHECK(r.n == 1);
    // x^2 + x + 1 divides x^3 - 1
    r = order_mod_poly(qpoly({1, 1, 1}), 10);
    CHECK(r.found);
    CHECK(r.n == 3);
    // same result through divisor hints
    r = order_mod_poly(qpoly({1, 1, 1}), 10, 6);
    CHECK(r.found);
    CHECK(r.n == 3);
    // x^2 - 2: sqrt(2) is not a root of unity.  Cross-check by direct powering.
    Polynomial m = qpoly({-2, 0, 1});
    r = order_mod_poly(m, 100);
    CHECK_FALSE(r.found);
    CHECK(r.n == 100);
    {
        Polynomial x = Polynomial::x(Q);
        Polynomial acc = x % m;
        for (int n = 1; n <= 100; ++n) {
            if (n > 1) acc = (acc * x) % m;
            bool is_one = acc.degree() == 0 && acc.coeff(0).is_one();
            CHECK_FALSE(is_one);
        }
    }
    // wrong hint falls back to the sweep
    r = order_mod_poly(qpoly({1, 1, 1}), 10, 4);
    CHECK(r.found);
    CHECK(r.n == 3);
    // hints can find orders beyond the cap
    r = order_mod_poly(qpoly({1, 1, 1, 1, 1, 1, 1}), 2, 7);
    CHECK(r.found);
    CHECK(r.n == 7);
    // order over a prime field
    r = order_mod_poly(fppoly(5, {3, 1}), 100);  // x = -3 = 2 mod 5, order 4
    CHECK(r.found);
    CHECK(r.n == 4);
    CHECK_THROWS(order_mod_poly(qpoly({0, 1}), 10));      // m(0) = 0
    CHECK_THROWS(order_mod_poly(qpoly({1, 2}), 10));      // not monic
    CHECK(order_mod_poly(qpoly({-1, 1}), 10, 12).found);  // hints with trivial answer
}

TEST_CASE("order_mod_poly minimality invariant") {
    // returned N: m | x^N - 1 and m does not divide x^M - 1 for proper divisors M
    auto Q = FieldSpec::rationals();
    Polynomial m = qpoly({1, 0, -1, 0, 1});  // 12th cyclotomic polynomial
    auto r = order_mod_poly(m, 20);
    REQUIRE(r.found);
    CHECK(r.n == 12);
    CHECK(m.divides(Polynomial::x_pow_minus_one(Q, 12)));
    for (unsigned long d : divisors_of(12)) {
        if (d == 12) continue;
        CHECK_FALSE(m.divides(Polynomial::x_pow_minus_one(Q, d)));
    }
}

TEST_CASE("factorization over prime fields") {
    // x^4 - 1 over F_5 splits into linear factors
    auto fac = factor_prime_field(fppoly(5, {-1, 0, 0, 0, 1}));
    REQUIRE(fac.size() == 4);
    for (const auto& [g, mult] : fac) {
        CHECK(g.degree() == 1);
        CHECK(mult == 1);
    }
    // x^2 + 1 irreducible over F_3
    fac = factor_prime_field(fppoly(3, {1, 0, 1}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == fppoly(3, {1, 0, 1}));
    CHECK(fac[0].second == 1);
    // (x-1)^3 over F_3 comes back with multiplicity 3
    fac = factor_prime_field(fppoly(3, {-1, 0, 0, 1}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == fppoly(3, {-1, 1}));
    CHECK(fac[0].second == 3);
    // mixed degrees: (x^2+x+1)(x-1)^2 over F_2; x^2+x+1 irreducible there
    fac = factor_prime_field(fppoly(2, {1, 1, 1}) * fppoly(2, {1, 1}) * fppoly(2, {1, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == fppoly(2, {1, 1}));
    CHECK(fac[0].second == 2);
    CHECK(fac[1].first == fppoly(2, {1, 1, 1}));
    CHECK(fac[1].second == 1);
    // x^8 - 1 over F_3: x^2+1 times linears times quadratic pieces; verify product reassembles
    Polynomial f = fppoly(3, {-1, 0, 0, 0, 0, 0, 0, 0, 1});
    fac = factor_prime_field(f);
    Polynomial prod = Polynomial::one(FieldSpec::prime_field(3));
    for (const auto& [g, mult] : fac)
        for (unsigned i = 0; i < mult; ++i) prod = prod * g;
    CHECK(prod == f.monic());
}

TEST_CASE("divisor enumeration") {
    CHECK(divisors_of(1) == std::vector<unsigned long>{1});
    CHECK(divisors_of(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(49) == std::vector<unsigned long>{1, 7, 49});
}

TEST_CASE("pow mod") {
    auto Q = FieldSpec::rationals();
    Polynomial m = qpoly({1, 1, 1});
    Polynomial x = Polynomial::x(Q);
    CHECK(poly_pow_mod(x, mpz_class(3), m) == Polynomial::one(Q));
    CHECK(poly_pow_mod(x, mpz_class(4), m) == (x % m));
    CHECK(poly_pow_mod(x, mpz_class(0), m) == Polynomial::one(Q));
    // large exponent sanity: x^(3^20) mod x^2+x+1 only depends on 3^20 mod 3
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 3, 20);
    CHECK(poly_pow_mod(x, big, m) == Polynomial::one(Q));
}
