#include <doctest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "hopfx/hopf.hpp"

using namespace hopfx;
using namespace hopfx::testutil;



TEST_CASE("group algebra of Z/2 satisfies all axioms") {
    HopfAlgebra h = make_kz2();
    AxiomReport r = verify_hopf(h);
    CHECK(r.associative);
    CHECK(r.unital);
    CHECK(r.coassociative);
    CHECK(r.counital);
    CHECK(r.bialgebra);
    CHECK(r.antipode_axiom);
    CHECK(r.antipode_invertible);
    CHECK(r.all());
    CHECK(r.detail.empty());
}

TEST_CASE("4-dimensional pointed example satisfies all axioms") {
    HopfAlgebra h = make_h4();
    CHECK(verify_hopf(h).all());
    // S has order 4 here: S^2(x) = -x
    Vec x = h.basis_vec(2);
    Vec s2x = apply_antipode_power(h, x, 2);
    CHECK(s2x[2] == -Scalar::one(h.field));
    CHECK(s2x[0].is_zero());
    // S^{-1}(x) = gx
    Vec sinvx = apply_antipode_power(h, x, -1);
    CHECK(sinvx[3].is_one());
    CHECK((h.antipode * h.antipode_inv).is_identity());
}

TEST_CASE("verification pinpoints a broken antipode") {
    HopfAlgebra h = make_h4();
    ExactMatrix s = h.antipode;
    s.at(3, 2) = Scalar::one(h.field);  // S(x) = +gx, wrong sign
    h.antipode = s;
    AxiomReport r = verify_hopf(h);
    CHECK(!r.all());
    CHECK(!r.antipode_axiom);
    CHECK(r.associative);
    CHECK(r.detail.find("antipode") != std::string::npos);
}

TEST_CASE("verification pinpoints broken associativity") {
    FieldSpec f = FieldSpec::rationals();
    Scalar one = Scalar::one(f);
    HopfAlgebra h;
    h.field = f;
    h.dim = 3;
    h.basis_labels = {"1", "a", "b"};
    h.mult.resize(9);
    auto set = [&](uint32_t i, uint32_t j, uint32_t k) { h.mult[size_t(i) * 3 + j] = {{k, one}}; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(0, 2, 2);
    set(1, 0, 1);
    set(2, 0, 2);
    set(1, 1, 2);  // a.a = b
    set(1, 2, 0);  // a.b = 1
    set(2, 1, 1);  // b.a = a, so (aa)a = a but a(aa) = 1
    set(2, 2, 0);
    h.unit = {one, Scalar::zero(f), Scalar::zero(f)};
    h.comult.resize(3);
    for (uint32_t i = 0; i < 3; ++i) h.comult[i] = {{i, i, one}};
    h.counit = {one, one, one};
    set_antipode(h, ExactMatrix::identity(f, 3));
    AxiomReport r = verify_hopf(h);
    CHECK(!r.associative);
    CHECK(!r.all());
}

TEST_CASE("verification pinpoints a multiplication incompatible with the antipode") {
    HopfAlgebra h = make_kz2();
    h.mult[3] = {{1, Scalar::one(h.field)}};  // g.g = g
    AxiomReport r = verify_hopf(h);
    CHECK(!r.antipode_axiom);
    CHECK(!r.all());
}

TEST_CASE("comultiplication of a skew-primitive element has the expected shape") {
    HopfAlgebra h = make_h4();
    Tensor2 d = comultiply(h, h.basis_vec(2));
    CHECK(d.at(2, 0).is_one());
    CHECK(d.at(1, 2).is_one());
    int nonzero = 0;
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b)
            if (!d.at(a, b).is_zero()) ++nonzero;
    CHECK(nonzero == 2);
}

TEST_CASE("power maps: small closed-form values") {
    HopfAlgebra z2 = make_kz2();
    CHECK(sweedler_power_map(z2, 1).is_identity());
    CHECK(sweedler_power_map(z2, 2) == counit_unit_map(z2));
    CHECK(sweedler_power_map(z2, 3) == ExactMatrix::identity(z2.field, 2));
    CHECK(sweedler_power_map(z2, 4) == counit_unit_map(z2));

    HopfAlgebra h4 = make_h4();
    CHECK(sweedler_power_map(h4, 1).is_identity());
    ExactMatrix f2 = sweedler_power_map(h4, 2);
    // f_2(x) = x - gx, never zero: the power map does not reach eps(.)1
    CHECK(f2.at(2, 2).is_one());
    CHECK(f2.at(3, 2) == -Scalar::one(h4.field));
    CHECK(f2.at(0, 2).is_zero());
    CHECK(f2 != counit_unit_map(h4));
}

TEST_CASE("power maps agree with the brute-force tensor expansion") {
    HopfAlgebra z2 = make_kz2();
    HopfAlgebra h4 = make_h4();
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(sweedler_power_map(z2, n) == testutil::brute_sweedler_power(z2, n));
        CHECK(sweedler_power_map(h4, n) == testutil::brute_sweedler_power(h4, n));
    }
}

TEST_CASE("dual construction") {
    HopfAlgebra z2 = make_kz2();
    HopfAlgebra d = dual(z2);
    CHECK(verify_hopf(d).all());
    // dual of a group algebra is the function algebra: basis idempotents summing to 1
    CHECK(d.unit[0].is_one());
    CHECK(d.unit[1].is_one());
    CHECK(d.row(0, 0) == SparseVec{{0, Scalar::one(d.field)}});
    CHECK(d.row(0, 1).empty());
    HopfAlgebra dd = dual(d);
    CHECK(dd.mult == z2.mult);
    CHECK(dd.comult == z2.comult);
    CHECK(dd.unit == z2.unit);
    CHECK(dd.counit == z2.counit);
    CHECK(dd.antipode == z2.antipode);

    HopfAlgebra h4 = make_h4();
    CHECK(verify_hopf(dual(h4)).all());
    HopfAlgebra h4dd = dual(dual(h4));
    CHECK(h4dd.mult == h4.mult);
    CHECK(h4dd.comult == h4.comult);
}

TEST_CASE("opposite and coopposite") {
    HopfAlgebra h4 = make_h4();
    HopfAlgebra op = opposite(h4);
    CHECK(verify_hopf(op).all());
    // xg = -gx shows up transposed
    CHECK(op.row(1, 2) == h4.row(2, 1));
    HopfAlgebra opop = opposite(op);
    CHECK(opop.mult == h4.mult);
    CHECK(opop.antipode == h4.antipode);

    HopfAlgebra cop = coopposite(h4);
    CHECK(verify_hopf(cop).all());
    HopfAlgebra copcop = coopposite(cop);
    CHECK(copcop.comult == h4.comult);
    CHECK(copcop.antipode == h4.antipode);
}

TEST_CASE("tensor product of algebras") {
    HopfAlgebra z2 = make_kz2();
    HopfAlgebra t = tensor_product(z2, z2);
    CHECK(t.dim == 4);
    CHECK(verify_hopf(t).all());
    CHECK(t.basis_labels[3] == "g(x)g");
    REQUIRE(t.known_grouplikes.size() == 1);
    CHECK(is_grouplike(t, t.known_grouplikes[0]));
    // (g(x)1).(1(x)g) = g(x)g
    Vec a = t.basis_vec(2), b = t.basis_vec(1);
    Vec ab = multiply(t, a, b);
    CHECK(ab[3].is_one());
}

TEST_CASE("base change into a larger field") {
    HopfAlgebra z2 = make_kz2();
    HopfAlgebra c = base_change(z2, FieldSpec::cyclotomic(4));
    CHECK(c.field == FieldSpec::cyclotomic(4));
    CHECK(verify_hopf(c).all());
    CHECK_THROWS(base_change(c, FieldSpec::rationals()));
}

TEST_CASE("integrals and semisimplicity") {
    HopfAlgebra z2 = make_kz2();
    Vec li = find_integral(z2);
    CHECK(li[0].is_one());
    CHECK(li[1].is_one());
    CHECK(is_semisimple(z2));
    CHECK(is_cosemisimple(z2));

    HopfAlgebra h4 = make_h4();
    Vec li4 = find_integral(h4);
    // integral is proportional to x + gx; normalized form has coordinate 1 twice
    CHECK(li4[0].is_zero());
    CHECK(li4[1].is_zero());
    CHECK(li4[2].is_one());
    CHECK(li4[3].is_one());
    Vec gli = multiply(h4, h4.basis_vec(1), li4);
    CHECK(gli == li4);
    CHECK(!is_semisimple(h4));
    CHECK(!is_cosemisimple(h4));
}

TEST_CASE("integral extraction rejects a non-Hopf multiplication") {
    FieldSpec f = FieldSpec::rationals();
    Scalar one = Scalar::one(f);
    HopfAlgebra h;
    h.field = f;
    h.dim = 2;
    h.basis_labels = {"1", "a"};
    h.mult.resize(4);
    // e_i . e_j = e_i: every element is a left integral for eps = (1,1)
    h.mult[0] = {{0, one}};
    h.mult[1] = {{0, one}};
    h.mult[2] = {{1, one}};
    h.mult[3] = {{1, one}};
    h.unit = {one, Scalar::zero(f)};
    h.comult.resize(2);
    h.comult[0] = {{0, 0, one}};
    h.comult[1] = {{1, 1, one}};
    h.counit = {one, one};
    set_antipode(h, ExactMatrix::identity(f, 2));
    CHECK_THROWS_AS(find_integral(h), std::runtime_error);
}

TEST_CASE("grouplike detection") {
    HopfAlgebra h4 = make_h4();
    CHECK(is_grouplike(h4, h4.basis_vec(0)));
    CHECK(is_grouplike(h4, h4.basis_vec(1)));
    CHECK(!is_grouplike(h4, h4.basis_vec(2)));
    Vec sum = h4.basis_vec(0);
    sum[1] = Scalar::one(h4.field);  // 1 + g: eps = 2
    CHECK(!is_grouplike(h4, sum));
}

TEST_CASE("skew-primitive spaces") {
    HopfAlgebra h4 = make_h4();
    Vec g = h4.basis_vec(1);
    SkewPrimitiveSpace sp = skew_primitive_space(h4, g);
    CHECK(sp.basis.size() == 2);  // span{ x, 1 - g }
    CHECK(sp.nontrivial);
    for (const Vec& y : sp.basis) {
        Tensor2 d = comultiply(h4, y);
        for (uint32_t a = 0; a < 4; ++a)
            for (uint32_t b = 0; b < 4; ++b) {
                Scalar expect = Scalar::zero(h4.field);
                if (b == 0) expect = expect + y[a];
                expect = expect + g[a] * y[b];
                CHECK(d.at(a, b) == expect);
            }
    }

    HopfAlgebra z2 = make_kz2();
    SkewPrimitiveSpace sp2 = skew_primitive_space(z2, z2.basis_vec(1));
    CHECK(sp2.basis.size() == 1);
    CHECK(!sp2.nontrivial);

    CHECK_THROWS_AS(skew_primitive_space(h4, h4.basis_vec(2)), std::invalid_argument);
}

TEST_CASE("element arithmetic: minimal polynomials, inverses, orders") {
    HopfAlgebra z2 = make_kz2();
    HopfAlgebra h4 = make_h4();
    FieldSpec q = FieldSpec::rationals();

    Polynomial mg = element_minimal_polynomial(z2, z2.basis_vec(1));
    CHECK(mg.degree() == 2);
    CHECK(mg.coeff(0) == Scalar::integer(q, -1));
    CHECK(mg.coeff(1).is_zero());

    Vec x = h4.basis_vec(2);
    Polynomial mx = element_minimal_polynomial(h4, x);
    CHECK(mx.degree() == 2);
    CHECK(mx.coeff(0).is_zero());
    CHECK(mx.coeff(1).is_zero());
    CHECK(minimal_polynomial(regular_rep_left(h4, x)) == mx);

    CHECK(!element_inverse(h4, x).has_value());
    auto ginv = element_inverse(h4, h4.basis_vec(1));
    REQUIRE(ginv.has_value());
    CHECK(*ginv == h4.basis_vec(1));

    CHECK(element_order(z2, z2.basis_vec(1), 10) == 2);
    CHECK(!element_order(h4, x, 10).has_value());
    CHECK(element_order(h4, h4.unit, 10) == 1);

    // (1+g)^2 = 2(1+g)
    Vec e = z2.basis_vec(0);
    e[1] = Scalar::one(q);
    Vec e2 = multiply(z2, e, e);
    CHECK(e2[0] == Scalar::integer(q, 2));
    CHECK(e2[1] == Scalar::integer(q, 2));
}
