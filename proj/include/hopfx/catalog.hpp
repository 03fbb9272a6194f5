#pragma once
#include "hopfx/hopf.hpp"

namespace hopfx {

// One known-answer expectation, tagged with the oracle or argument that pins
// it so the test suite can re-derive every claim independently.
struct ExpectedExponent {
    bool infinite = false;
    unsigned long value = 0;  // meaningful when finite
    std::string basis;
};

struct CatalogEntry {
    std::string name;
    // "group" (group algebras, including tensor products of them), "dual",
    // "twist" (bicharacter/cocycle twists), "pointed" (Taft-type and their
    // tensor factors); drives the divisibility requirements of the scanner
    std::string family;
    HopfAlgebra algebra;
    std::optional<ExpectedExponent> exponent;
    std::optional<bool> semisimple;
    std::string semisimple_basis;
    std::optional<bool> cosemisimple;
    std::string cosemisimple_basis;
    // lcm of group element orders, straight off the multiplication table,
    // for presets that are (or dualize) a group algebra
    std::optional<unsigned long> group_exponent;
};

// Group algebra k[G] from a multiplication table t[i][j] = index of g_i g_j.
// The table is validated as a group (identity, inverses, associativity);
// Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}, and every basis element is
// recorded as grouplike.  Throws on a non-group table.
HopfAlgebra group_algebra(const std::vector<std::vector<uint32_t>>& table, const FieldSpec& f,
                          const std::string& name = "k[G]");

// Functions on G: the dual of group_algebra in the point-evaluation basis,
// with known_grouplikes set to the characters of G that exist over f.
HopfAlgebra dual_group_algebra(const std::vector<std::vector<uint32_t>>& table, const FieldSpec& f,
                               const std::string& name = "k^G");

// Taft algebra of order n^2: g^n = 1, x^n = 0, x g = q g x with q a primitive
// n-th root of unity found in f; Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x,
// coproducts of the monomial basis are expanded from the generators and the
// antipode is solved.  n = 2 gives the four-dimensional small quantum case.
// Throws when f has no primitive n-th root.
HopfAlgebra taft_algebra(unsigned n, const FieldSpec& f);

// Exponent of the group itself: lcm of element orders read off the table.
unsigned long group_exponent_from_table(const std::vector<std::vector<uint32_t>>& table);

// Characters of the group over f (one-dimensional representations), as
// coordinate vectors in the point-evaluation basis of k^G.  Computed through
// the abelianization, so it works for nonabelian tables too.
std::vector<Vec> group_characters(const std::vector<std::vector<uint32_t>>& table,
                                  const FieldSpec& f);

// Multiplication tables generated internally from standard realizations
// (powers, bit pairs, permutations, sign-axis quaternions), identity at 0.
std::vector<std::vector<uint32_t>> cyclic_group_table(unsigned n);
std::vector<std::vector<uint32_t>> klein_group_table();
std::vector<std::vector<uint32_t>> symmetric3_table();
std::vector<std::vector<uint32_t>> dihedral4_table();
std::vector<std::vector<uint32_t>> quaternion_table();

// Shipped presets; every algebra returned has passed verify_hopf.
const std::vector<std::string>& preset_names();
CatalogEntry preset(const std::string& name);

}  // namespace hopfx
