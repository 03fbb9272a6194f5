#include "hopfx/twist.hpp"

#include <doctest.h>

#include "hopfx/double.hpp"
#include "hopfx/exponent.hpp"
#include "fixtures.hpp"

using namespace hopfx;
using namespace hopfx::testutil;

namespace {

Tensor2 unit_twist(const HopfAlgebra& h) {
    Tensor2 j(h.field, h.dim, h.dim);
    for (uint32_t u = 0; u < h.dim; ++u)
        for (uint32_t w = 0; w < h.dim; ++w) j.at(u, w) = h.unit[u] * h.unit[w];
    return j;
}

// beta(chi_{(u,v)}, chi_{(u',v')}) = (-1)^{v u'} on a rank-two elementary
// abelian character group with tuple index u*2+v; a non-symmetric bicharacter
std::vector<std::vector<Scalar>> rank2_skew_table(const FieldSpec& f) {
    Scalar one = Scalar::one(f);
    std::vector<std::vector<Scalar>> t(4, std::vector<Scalar>(4, one));
    for (size_t x = 0; x < 4; ++x)
        for (size_t y = 0; y < 4; ++y)
            if (((x % 2) * (y / 2)) % 2) t[x][y] = -one;
    return t;
}

unsigned long sp2_order(const HopfAlgebra& h, const Sp2& w, unsigned long cap) {
    Sp2 acc = sp2_unit(h);
    for (unsigned long n = 1; n <= cap; ++n) {
        acc = sp2_mult(h, acc, w);
        if (sp2_equal(acc, sp2_unit(h))) return n;
    }
    return 0;
}

}  // namespace

TEST_CASE("trivial twist verifies and leaves the structure unchanged") {
    HopfAlgebra h = make_h4();
    Tensor2 j = unit_twist(h);
    TwistReport rep = verify_twist(h, j);
    CHECK(rep.all());
    CHECK(rep.detail.empty());

    HopfAlgebra tw = apply_twist(h, j);
    CHECK(tw.mult == h.mult);
    CHECK(tw.comult == h.comult);
    CHECK(tw.counit == h.counit);
    CHECK(tw.antipode == h.antipode);  // re-solved, must land on the same map
    CHECK(tw.known_grouplikes == h.known_grouplikes);
}

TEST_CASE("perturbed twist is rejected") {
    HopfAlgebra h = make_h4();
    Tensor2 j = unit_twist(h);
    j.at(1, 2) = Scalar::one(h.field);  // 1(x)1 + g(x)x
    TwistReport rep = verify_twist(h, j);
    CHECK_FALSE(rep.all());
    CHECK_FALSE(rep.counital);
    CHECK_FALSE(rep.detail.empty());
    CHECK_THROWS_AS((void)apply_twist(h, j), std::invalid_argument);
}

TEST_CASE("tensor square inverse finds two-sided inverses only") {
    HopfAlgebra h = make_kz2();
    auto inv = tensor_square_inverse(h, unit_twist(h));
    REQUIRE(inv.has_value());
    CHECK(*inv == unit_twist(h));

    Tensor2 bad(h.field, 2, 2);  // (1 - g)(x)(1 + g), annihilated by (1 + g)(x)1
    bad.at(0, 0) = Scalar::one(h.field);
    bad.at(1, 1) = -Scalar::one(h.field);
    bad.at(0, 1) = Scalar::one(h.field);
    bad.at(1, 0) = -Scalar::one(h.field);
    CHECK_FALSE(tensor_square_inverse(h, bad).has_value());
}

TEST_CASE("klein four-group bicharacter twist leaves the coproduct alone") {
    HopfAlgebra h = group_fixture("kv4", klein_table());
    std::vector<Vec> gens = {h.basis_vec(1), h.basis_vec(2)};
    Twist t = bicharacter_twist(h, gens, rank2_skew_table(h.field));
    CHECK(t.j != unit_twist(h));
    CHECK(verify_twist(h, t.j).all());
    CHECK(sp2_equal(sp2_mult(h, sp2_from_tensor2(t.j), sp2_from_tensor2(t.j_inverse)),
                    sp2_unit(h)));

    // the group is abelian, so conjugation by J does nothing
    HopfAlgebra tw = apply_twist(h, t.j);
    CHECK(tw.comult == h.comult);
    CHECK(tw.antipode == h.antipode);
}

TEST_CASE("dihedral twist deforms the coproduct and keeps the exponent") {
    HopfAlgebra h = group_fixture("kd4", d4_table());
    // A = {1, r^2, s, r^2 s}, a Klein four-group inside the dihedral group
    std::vector<Vec> gens = {h.basis_vec(2), h.basis_vec(4)};
    Twist t = bicharacter_twist(h, gens, rank2_skew_table(h.field));
    HopfAlgebra tw = apply_twist(h, t.j);

    CHECK(tw.dim == 8);
    CHECK(tw.mult == h.mult);  // the algebra is untouched, bit for bit
    CHECK(tw.comult != h.comult);
    CHECK(verify_hopf(tw).all());

    // r^2, s, r^2 s centralize the twisting subgroup and stay grouplike; the
    // four rotations/reflections outside A do not
    CHECK(tw.known_grouplikes.size() == 3);

    ExponentResult base = decide_exponent(h, default_cap(h));
    ExponentResult twisted = decide_exponent(tw, default_cap(tw));
    REQUIRE(base.status == ExpStatus::Finite);
    REQUIRE(twisted.status == ExpStatus::Finite);
    CHECK(base.value == 4);
    CHECK(twisted.value == 4);
}

TEST_CASE("quaternion twists: bicharacters are vacuous, a cocycle is not") {
    FieldSpec f = FieldSpec::cyclotomic(4);
    HopfAlgebra h = group_fixture("kq8", q8_table(), f);
    std::vector<Vec> gens = {h.basis_vec(2)};  // +i generates a cyclic subgroup of order 4
    Scalar zeta = Scalar::zeta(f);

    // every bicharacter on the dual of <i> gives J = sum e_a (x) i^a, which is
    // invariant under conjugation, so the twist does not move the coproduct
    std::vector<std::vector<Scalar>> bichar(4, std::vector<Scalar>(4));
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) bichar[a][b] = zeta.pow(long(a * b));
    HopfAlgebra tw0 = apply_twist(h, bicharacter_twist(h, gens, bichar).j);
    CHECK(tw0.comult == h.comult);

    // a normalized 2-cocycle that is not a bicharacter does deform it
    std::vector<Scalar> v = {Scalar::one(f), Scalar::one(f), Scalar::one(f), zeta};
    std::vector<std::vector<Scalar>> cocycle(4, std::vector<Scalar>(4));
    for (size_t a = 0; a < 4; ++a)
        for (size_t b = 0; b < 4; ++b) cocycle[a][b] = v[a] * v[b] * v[(a + b) % 4].inverse();
    Twist t = bicharacter_twist(h, gens, cocycle);
    HopfAlgebra tw = apply_twist(h, t.j);
    CHECK(tw.comult != h.comult);
    CHECK(tw.mult == h.mult);

    ExponentResult base = decide_exponent(h, default_cap(h));
    ExponentResult twisted = decide_exponent(tw, default_cap(tw));
    REQUIRE(base.status == ExpStatus::Finite);
    REQUIRE(twisted.status == ExpStatus::Finite);
    CHECK(base.value == 4);
    CHECK(twisted.value == 4);
}

TEST_CASE("twisted double of the order-two group algebra stays quasitriangular") {
    DrinfeldDouble dd = build_double(make_kz2());
    const HopfAlgebra& d = dd.algebra;

    // grouplikes of D: the embedded group element and the embedded sign character
    Vec sgn = {Scalar::one(d.field), -Scalar::one(d.field)};
    std::vector<Vec> gens = {dd.embed_H(make_kz2().basis_vec(1)), dd.embed_Hstar(sgn)};
    Twist t = bicharacter_twist(d, gens, rank2_skew_table(d.field));

    HopfAlgebra twd = apply_twist(d, t.j);
    CHECK(twd.comult == d.comult);  // D(kZ2) is commutative, conjugation is trivial

    Tensor2 rj = twist_r_matrix(d, dd.r_matrix, t.j);
    CHECK(rj != dd.r_matrix);  // the table is not symmetric, so J21 != J

    DrinfeldDouble twisted = dd;
    twisted.algebra = twd;
    twisted.r_matrix = rj;
    // Drinfeld element of the twisted structure: u = sum S(b) a over R = sum a (x) b
    Vec u = twd.zero_vec();
    for (uint32_t a = 0; a < twd.dim; ++a)
        for (uint32_t b = 0; b < twd.dim; ++b) {
            const Scalar& c = rj.at(a, b);
            if (c.is_zero()) continue;
            Vec sb = apply_antipode_power(twd, twd.basis_vec(b), 1);
            Vec term = multiply(twd, sb, twd.basis_vec(a));
            for (uint32_t k = 0; k < twd.dim; ++k) u[k] = u[k] + c * term[k];
        }
    twisted.u = u;

    CHECK(verify_quasitriangular(twisted).all());
    CHECK(verify_drinfeld_identities(twisted).all());

    // R21^J R^J is conjugate to R21 R, so the monodromy orders agree
    Sp2 w0 = sp2_mult(d, sp2_flip(sp2_from_tensor2(dd.r_matrix)), sp2_from_tensor2(dd.r_matrix));
    Sp2 w1 = sp2_mult(twd, sp2_flip(sp2_from_tensor2(rj)), sp2_from_tensor2(rj));
    CHECK(sp2_order(d, w0, 16) == sp2_order(twd, w1, 16));
    CHECK(sp2_order(d, w0, 16) == 2);
}

TEST_CASE("roots of unity across the three field kinds") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(field_root_of_unity(q, 1) == Scalar::one(q));
    CHECK(field_root_of_unity(q, 2) == Scalar::integer(q, -1));
    CHECK_FALSE(field_root_of_unity(q, 3).has_value());

    FieldSpec c4 = FieldSpec::cyclotomic(4);
    auto z4 = field_root_of_unity(c4, 4);
    REQUIRE(z4.has_value());
    CHECK(z4->pow(4).is_one());
    CHECK_FALSE(z4->pow(2).is_one());

    FieldSpec c3 = FieldSpec::cyclotomic(3);
    auto z6 = field_root_of_unity(c3, 6);  // -zeta_3 has order six
    REQUIRE(z6.has_value());
    CHECK(z6->pow(6).is_one());
    CHECK_FALSE(z6->pow(3).is_one());
    CHECK_FALSE(z6->pow(2).is_one());

    FieldSpec f5 = FieldSpec::prime_field(5);
    auto r4 = field_root_of_unity(f5, 4);
    REQUIRE(r4.has_value());
    CHECK(r4->pow(4).is_one());
    CHECK_FALSE(r4->pow(2).is_one());
    CHECK_FALSE(field_root_of_unity(f5, 3).has_value());
}

TEST_CASE("twist construction rejects bad input") {
    HopfAlgebra d4 = group_fixture("kd4", d4_table());
    Scalar one = Scalar::one(d4.field);

    // r and s generate the whole (nonabelian) dihedral group
    CHECK_THROWS_AS((void)bicharacter_twist(d4, {d4.basis_vec(1), d4.basis_vec(4)},
                                            rank2_skew_table(d4.field)),
                    std::invalid_argument);

    // a rational cyclic group of order four has no quartic characters
    HopfAlgebra z4 = group_fixture("kz4", cyclic_table(4));
    std::vector<std::vector<Scalar>> flat(4, std::vector<Scalar>(4, one));
    CHECK_THROWS_AS((void)bicharacter_twist(z4, {z4.basis_vec(1)}, flat), std::invalid_argument);

    // non-grouplike generator
    HopfAlgebra h4 = make_h4();
    CHECK_THROWS_AS((void)bicharacter_twist(h4, {h4.basis_vec(2)}, flat), std::invalid_argument);

    std::vector<Vec> gens = {d4.basis_vec(2), d4.basis_vec(4)};
    // wrong table size
    std::vector<std::vector<Scalar>> small(3, std::vector<Scalar>(3, one));
    CHECK_THROWS_AS((void)bicharacter_twist(d4, gens, small), std::invalid_argument);
    // broken normalization
    auto bad = rank2_skew_table(d4.field);
    bad[0][1] = -one;
    CHECK_THROWS_AS((void)bicharacter_twist(d4, gens, bad), std::invalid_argument);
    // zero entry
    auto zero_entry = rank2_skew_table(d4.field);
    zero_entry[2][3] = Scalar::zero(d4.field);
    CHECK_THROWS_AS((void)bicharacter_twist(d4, gens, zero_entry), std::invalid_argument);
    // not a cocycle: flip one interior sign of a valid table
    auto warped = rank2_skew_table(d4.field);
    warped[3][3] = -warped[3][3];
    CHECK_THROWS_AS((void)bicharacter_twist(d4, gens, warped), std::invalid_argument);
}
