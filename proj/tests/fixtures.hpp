#pragma once
#include <array>
#include <string>
#include <vector>

#include "hopfx/hopf.hpp"

// Hand-rolled fixtures, independent of the preset catalog on purpose.
namespace hopfx::testutil {

inline HopfAlgebra make_kz2() {
    FieldSpec f = FieldSpec::rationals();
    Scalar one = Scalar::one(f);
    HopfAlgebra h;
    h.name = "kz2";
    h.field = f;
    h.dim = 2;
    h.basis_labels = {"1", "g"};
    h.mult.resize(4);
    h.mult[0] = {{0, one}};
    h.mult[1] = {{1, one}};
    h.mult[2] = {{1, one}};
    h.mult[3] = {{0, one}};
    h.unit = {one, Scalar::zero(f)};
    h.comult.resize(2);
    h.comult[0] = {{0, 0, one}};
    h.comult[1] = {{1, 1, one}};
    h.counit = {one, one};
    set_antipode(h, ExactMatrix::identity(f, 2));
    h.known_grouplikes = {h.basis_vec(1)};
    return h;
}

// 4-dimensional algebra with g^2 = 1, x^2 = 0, xg = -gx,
// Delta(g) = g(x)g, Delta(x) = x(x)1 + g(x)x.
// Basis order: 1, g, x, gx.
inline HopfAlgebra make_h4(FieldSpec f = FieldSpec::rationals()) {
    Scalar one = Scalar::one(f);
    HopfAlgebra h;
    h.name = "h4";
    h.field = f;
    h.dim = 4;
    h.basis_labels = {"1", "g", "x", "gx"};
    auto idx = [](int gi, int xj) { return uint32_t(gi + 2 * xj); };
    h.mult.resize(16);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    if (j1 + j2 >= 2) continue;  // x^2 = 0
                    Scalar c = (j1 * i2) % 2 ? -one : one;
                    h.mult[size_t(idx(i1, j1)) * 4 + idx(i2, j2)] = {{idx((i1 + i2) % 2, j1 + j2), c}};
                }
    h.unit = h.zero_vec();
    h.unit[0] = one;
    h.comult.resize(4);
    h.comult[0] = {{0, 0, one}};
    h.comult[1] = {{1, 1, one}};
    h.comult[2] = {{1, 2, one}, {2, 0, one}};  // g(x)x + x(x)1
    h.comult[3] = {{0, 3, one}, {3, 1, one}};  // 1(x)gx + gx(x)g
    h.counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
    ExactMatrix s(f, 4, 4);
    s.at(0, 0) = one;
    s.at(1, 1) = one;
    s.at(3, 2) = -one;  // S(x) = -gx
    s.at(2, 3) = one;   // S(gx) = x
    set_antipode(h, s);
    h.known_grouplikes = {h.basis_vec(0), h.basis_vec(1)};
    return h;
}

// group algebra from a multiplication table t[i][j] = index of g_i g_j,
// with the identity at index 0
inline HopfAlgebra group_fixture(const std::string& name, const std::vector<std::vector<uint32_t>>& t,
                                 FieldSpec f = FieldSpec::rationals()) {
    Scalar one = Scalar::one(f);
    uint32_t n = uint32_t(t.size());
    HopfAlgebra h;
    h.name = name;
    h.field = f;
    h.dim = n;
    for (uint32_t i = 0; i < n; ++i) h.basis_labels.push_back("g" + std::to_string(i));
    h.mult.resize(size_t(n) * n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) h.mult[size_t(i) * n + j] = {{t[i][j], one}};
    h.unit = h.zero_vec();
    h.unit[0] = one;
    h.comult.resize(n);
    h.counit.assign(n, one);
    ExactMatrix s(f, n, n);
    for (uint32_t i = 0; i < n; ++i) {
        h.comult[i] = {{i, i, one}};
        for (uint32_t k = 0; k < n; ++k)
            if (t[i][k] == 0) s.at(k, i) = one;  // S(g) = g^{-1}
    }
    set_antipode(h, std::move(s));
    for (uint32_t i = 1; i < n; ++i) h.known_grouplikes.push_back(h.basis_vec(i));
    return h;
}

inline std::vector<std::vector<uint32_t>> cyclic_table(uint32_t n) {
    std::vector<std::vector<uint32_t>> t(n, std::vector<uint32_t>(n));
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

inline std::vector<std::vector<uint32_t>> klein_table() {
    std::vector<std::vector<uint32_t>> t(4, std::vector<uint32_t>(4));
    for (uint32_t i = 0; i < 4; ++i)
        for (uint32_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
    return t;
}

// symmetric group on 3 letters; elements are the permutations of {0,1,2} in
// lexicographic one-line order, so the identity sits at index 0
inline std::vector<std::vector<uint32_t>> s3_table() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const std::array<int, 3>& p) {
        for (uint32_t k = 0; k < 6; ++k)
            if (perms[k] == p) return k;
        return uint32_t(6);
    };
    std::vector<std::vector<uint32_t>> t(6, std::vector<uint32_t>(6));
    for (uint32_t i = 0; i < 6; ++i)
        for (uint32_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[size_t(x)] = perms[i][size_t(perms[j][size_t(x)])];
            t[i][j] = find(c);
        }
    return t;
}

// dihedral group of order 8: element r^a s^b at index a + 4b
inline std::vector<std::vector<uint32_t>> d4_table() {
    std::vector<std::vector<uint32_t>> t(8, std::vector<uint32_t>(8));
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 2; ++b)
            for (uint32_t c = 0; c < 4; ++c)
                for (uint32_t d = 0; d < 2; ++d) {
                    uint32_t rot = (a + (b ? 4 - c : c)) % 4;
                    t[a + 4 * b][c + 4 * d] = rot + 4 * ((b + d) % 2);
                }
    return t;
}

// quaternion group: +1,-1,+i,-i,+j,-j,+k,-k at indices 0..7 (sign bit low)
inline std::vector<std::vector<uint32_t>> q8_table() {
    // axis products for 1,i,j,k: result axis and sign bit
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<uint32_t>> t(8, std::vector<uint32_t>(8));
    for (uint32_t a1 = 0; a1 < 4; ++a1)
        for (uint32_t s1 = 0; s1 < 2; ++s1)
            for (uint32_t a2 = 0; a2 < 4; ++a2)
                for (uint32_t s2 = 0; s2 < 2; ++s2)
                    t[2 * a1 + s1][2 * a2 + s2] =
                        2 * uint32_t(ax[a1][a2]) + ((s1 + s2 + uint32_t(sg[a1][a2])) % 2);
    return t;
}

}  // namespace hopfx::testutil
