#include <doctest.h>

#include "hopfx/field.hpp"

using namespace hopfx;

TEST_CASE("rational arithmetic and parsing") {
    auto Q = FieldSpec::rationals();
    Scalar a = Scalar::parse(Q, "3/6");
    CHECK(a.str() == "1/2");
    Scalar b = Scalar::parse(Q, "-4/8");
    CHECK((a + b).is_zero());
    CHECK((a * Scalar::integer(Q, 2)).is_one());
    CHECK(Scalar::parse(Q, "7").str() == "7");
    CHECK(Scalar::parse(Q, " -7 / 3 ").str() == "-7/3");
    CHECK(Scalar::integer(Q, 5).pow(-2).str() == "1/25");
    CHECK_THROWS(Scalar::parse(Q, "1/0"));
    CHECK_THROWS(Scalar::parse(Q, "abc"));
    CHECK_THROWS(Scalar::parse(Q, ""));
    CHECK_THROWS(Scalar::zero(Q).inverse());
}

TEST_CASE("cyclotomic modulus spot checks") {
    CHECK(cyclotomic_basis(1).degree == 1);
    CHECK(cyclotomic_basis(2).degree == 1);
    CHECK(cyclotomic_basis(4).degree == 2);
    // x^4 - x^2 + 1
    const auto& b12 = cyclotomic_basis(12);
    CHECK(b12.degree == 4);
    CHECK(b12.modulus[0] == 1);
    CHECK(b12.modulus[1] == 0);
    CHECK(b12.modulus[2] == -1);
    CHECK(b12.modulus[3] == 0);
    CHECK(b12.modulus[4] == 1);
    // 1 + x + ... + x^6 for n = 7
    const auto& b7 = cyclotomic_basis(7);
    CHECK(b7.degree == 6);
    for (unsigned i = 0; i <= 6; ++i) CHECK(b7.modulus[i] == 1);
    CHECK(cyclotomic_basis(64).degree == 32);
}

TEST_CASE("cyclotomic arithmetic") {
    auto F = FieldSpec::cyclotomic(4);
    Scalar i = Scalar::zeta(F);
    CHECK((i * i) == -Scalar::one(F));
    CHECK(i.pow(4).is_one());
    CHECK((i.inverse() * i).is_one());
    CHECK(i.inverse() == i.pow(3));

    auto F5 = FieldSpec::cyclotomic(5);
    Scalar z = Scalar::zeta(F5);
    // 1 + z + z^2 + z^3 + z^4 = 0
    Scalar s = Scalar::one(F5);
    for (int k = 1; k <= 4; ++k) s = s + z.pow(k);
    CHECK(s.is_zero());
    Scalar w = Scalar::one(F5) + z;
    CHECK((w * w.inverse()).is_one());

    // primitive root collapses in small conductors
    auto F1 = FieldSpec::cyclotomic(1);
    CHECK(Scalar::zeta(F1).is_one());
    auto F2 = FieldSpec::cyclotomic(2);
    CHECK(Scalar::zeta(F2) == -Scalar::one(F2));
}

TEST_CASE("cyclotomic printing and parsing round-trips") {
    auto F = FieldSpec::cyclotomic(12);
    Scalar z = Scalar::zeta(F);
    Scalar v = Scalar::from_mpq(F, mpq_class(1, 2)) * z.pow(3) - z;
    CHECK(v.str() == "1/2*z^3 - z");
    CHECK(Scalar::parse(F, v.str()) == v);
    CHECK(Scalar::parse(F, "z^2 - 1") == z * z - Scalar::one(F));
    CHECK(Scalar::parse(F, "-z") == -z);
    CHECK(Scalar::parse(F, "0").is_zero());
    CHECK(Scalar::zero(F).str() == "0");
    // reduction happens on parse: z^12 = 1
    CHECK(Scalar::parse(F, "z^12").is_one());
    CHECK(Scalar::parse(F, "z^13") == z);
    CHECK_THROWS(Scalar::parse(F, "z^"));
    CHECK_THROWS(Scalar::parse(F, "q + 1"));

    auto F8 = FieldSpec::cyclotomic(8);
    Scalar y = Scalar::zeta(F8);
    Scalar u = y + y.pow(7);  // sqrt(2) lives here but stays in the power basis
    CHECK((u * u) == Scalar::integer(F8, 2));
    CHECK(Scalar::parse(F8, u.str()) == u);
}

TEST_CASE("prime field arithmetic") {
    auto F = FieldSpec::prime_field(7);
    Scalar a = Scalar::integer(F, 10);
    CHECK(a.residue() == 3);
    CHECK(a.str() == "3 mod 7");
    CHECK(Scalar::parse(F, "3 mod 7") == a);
    CHECK(Scalar::parse(F, "-4 mod 7") == a);
    CHECK(Scalar::parse(F, "10") == a);
    CHECK((a.inverse() * a).is_one());
    CHECK(Scalar::integer(F, 3).pow(6).is_one());
    CHECK(Scalar::from_mpq(F, mpq_class(1, 2)).residue() == 4);
    CHECK_THROWS(Scalar::parse(F, "3 mod 11"));
    CHECK_THROWS(FieldSpec::prime_field(6));
    CHECK_THROWS(FieldSpec::cyclotomic(65));
    CHECK_THROWS(FieldSpec::cyclotomic(0));
}

TEST_CASE("field embeddings") {
    auto Q = FieldSpec::rationals();
    auto F4 = FieldSpec::cyclotomic(4);
    auto F12 = FieldSpec::cyclotomic(12);
    Scalar half = Scalar::parse(Q, "1/2");
    CHECK(half.embed_into(F4) == Scalar::from_mpq(F4, mpq_class(1, 2)));
    // z_4 -> z_12^3
    Scalar i4 = Scalar::zeta(F4);
    Scalar i12 = i4.embed_into(F12);
    CHECK(i12 == Scalar::zeta(F12).pow(3));
    CHECK((i12 * i12) == -Scalar::one(F12));
    // embeddings respect arithmetic
    Scalar v = Scalar::from_mpq(F4, mpq_class(2, 3)) + i4;
    CHECK(v.embed_into(F12) == Scalar::from_mpq(F12, mpq_class(2, 3)) + i12);
    CHECK_THROWS(i4.embed_into(FieldSpec::cyclotomic(6)));
    CHECK_THROWS(i4.embed_into(Q));
    CHECK_THROWS(half.embed_into(FieldSpec::prime_field(5)));
}

TEST_CASE("scalars of different fields refuse to mix") {
    auto Q = FieldSpec::rationals();
    auto F = FieldSpec::prime_field(5);
    CHECK_THROWS(Scalar::one(Q) + Scalar::one(F));
    CHECK(Scalar::one(Q) != Scalar::one(F));
}
