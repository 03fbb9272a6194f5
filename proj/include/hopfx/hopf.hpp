#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfx/matrix.hpp"

namespace hopfx {

// Dense coordinate vector of an algebra element in the stored basis.
using Vec = std::vector<Scalar>;

struct SparseEntry {
    uint32_t idx;
    Scalar c;
    bool operator==(const SparseEntry&) const = default;
};
// sorted by idx, zero coefficients dropped
using SparseVec = std::vector<SparseEntry>;

struct PairEntry {
    uint32_t a, b;
    Scalar c;
    bool operator==(const PairEntry&) const = default;
};
// sorted by (a, b), zero coefficients dropped
using SparsePair = std::vector<PairEntry>;

// Element of H (x) H with dense coordinates, row-major over basis pairs.
struct Tensor2 {
    uint32_t d1 = 0, d2 = 0;
    std::vector<Scalar> c;  // c[a * d2 + b]

    Tensor2() = default;
    Tensor2(const FieldSpec& f, uint32_t dim1, uint32_t dim2)
        : d1(dim1), d2(dim2), c(size_t(dim1) * dim2, Scalar::zero(f)) {}
    const Scalar& at(uint32_t a, uint32_t b) const { return c[size_t(a) * d2 + b]; }
    Scalar& at(uint32_t a, uint32_t b) { return c[size_t(a) * d2 + b]; }
    bool operator==(const Tensor2& o) const { return d1 == o.d1 && d2 == o.d2 && c == o.c; }
    bool operator!=(const Tensor2& o) const { return !(*this == o); }
};

// Finite-dimensional Hopf algebra as structure-constant tensors over an
// exact field.  Matrices act by columns: S(e_j) = sum_i antipode(i,j) e_i.
struct HopfAlgebra {
    std::string name;
    FieldSpec field = FieldSpec::rationals();
    uint32_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<SparseVec> mult;    // row i*dim+j = coefficients of e_i * e_j
    Vec unit;                       // coordinates of 1
    std::vector<SparsePair> comult; // comult[i] = Delta(e_i)
    Vec counit;                     // counit[i] = eps(e_i)
    ExactMatrix antipode;
    ExactMatrix antipode_inv;       // computed during verification
    std::vector<Vec> known_grouplikes;
    std::optional<bool> semisimple_flag;
    std::optional<bool> cosemisimple_flag;
    // optional algebra generators used to accelerate verification of large
    // algebras (see verify_hopf); soundness is argued where they are used
    std::vector<Vec> generator_hints;

    const SparseVec& row(uint32_t i, uint32_t j) const { return mult[size_t(i) * dim + j]; }
    Vec basis_vec(uint32_t i) const;
    Vec zero_vec() const { return Vec(dim, Scalar::zero(field)); }
};

struct AxiomReport {
    bool associative = false;
    bool unital = false;
    bool coassociative = false;
    bool counital = false;
    bool bialgebra = false;       // Delta and eps are algebra maps
    bool antipode_axiom = false;  // m(S (x) I)Delta = unit.eps = m(I (x) S)Delta
    bool antipode_invertible = false;
    std::string detail;           // first failure description, empty on pass

    bool all() const {
        return associative && unital && coassociative && counital && bialgebra && antipode_axiom &&
               antipode_invertible;
    }
};

// Install the antipode and its inverse; throws when the matrix is singular.
void set_antipode(HopfAlgebra& h, ExactMatrix s);

// Solve for the antipode of a bialgebra given by h's mult/comult/unit/counit
// (h.antipode is ignored): the antipode is the convolution inverse of the
// identity, so compute the minimal polynomial of id in the convolution
// algebra by a Krylov chain and read the inverse off its coefficients.
// Throws when id is not convolution-invertible (no antipode exists).
ExactMatrix solve_antipode(const HopfAlgebra& h);

// ---- element-level operations ----
Vec multiply(const HopfAlgebra& h, const Vec& a, const Vec& b);
Tensor2 comultiply(const HopfAlgebra& h, const Vec& a);
Scalar counit_of(const HopfAlgebra& h, const Vec& a);
Vec apply_antipode_power(const HopfAlgebra& h, const Vec& a, long k);
bool is_unit_vec(const HopfAlgebra& h, const Vec& a);  // a == 1 exactly

// left-regular representation matrix L_a
ExactMatrix regular_rep_left(const HopfAlgebra& h, const Vec& a);
// minimal polynomial of the element a (equals that of L_a: the regular
// representation is faithful), by a Krylov chain on powers of a
Polynomial element_minimal_polynomial(const HopfAlgebra& h, const Vec& a);
// inverse of a in the algebra via its minimal polynomial; nullopt if singular
std::optional<Vec> element_inverse(const HopfAlgebra& h, const Vec& a);
// least k <= cap with a^k = 1
std::optional<unsigned long> element_order(const HopfAlgebra& h, const Vec& a, unsigned long cap);

// ---- verification ----
// Checks every Hopf axiom exactly.  Small algebras (dim <= 64) are checked
// fully exhaustively (all d^3 triples / d^2 pairs).  Larger algebras use the
// generator reduction when generator_hints are present: associativity on
// (all, all, g) and multiplicativity of Delta on (all, g) for algebra
// generators g imply the full laws (the failure sets are subspaces closed
// under multiplication), with every other axiom still exhaustive.
AxiomReport verify_hopf(const HopfAlgebra& h);

// ---- functorial constructions ----
HopfAlgebra dual(const HopfAlgebra& h);
HopfAlgebra opposite(const HopfAlgebra& h);
HopfAlgebra coopposite(const HopfAlgebra& h);
HopfAlgebra tensor_product(const HopfAlgebra& h1, const HopfAlgebra& h2);
HopfAlgebra base_change(const HopfAlgebra& h, const FieldSpec& target);

// ---- structure probes ----
// matrix of f_n, where f_1 = I and f_n(x) = sum f_{n-1}(x_(1)) . S^{-2(n-1)}(x_(2))
ExactMatrix sweedler_power_map(const HopfAlgebra& h, unsigned long n);
// the matrix of x -> eps(x) . 1, the target of the exponent condition
ExactMatrix counit_unit_map(const HopfAlgebra& h);

Vec find_integral(const HopfAlgebra& h);  // left integral, normalized
bool is_semisimple(const HopfAlgebra& h);
bool is_cosemisimple(const HopfAlgebra& h);
bool is_grouplike(const HopfAlgebra& h, const Vec& g);

struct SkewPrimitiveSpace {
    std::vector<Vec> basis;       // solutions of Delta(x) = x (x) 1 + g (x) x
    bool nontrivial = false;      // some solution lies outside k[g]
    std::optional<Vec> witness;   // such a solution, when one exists
};
SkewPrimitiveSpace skew_primitive_space(const HopfAlgebra& h, const Vec& g);

}  // namespace hopfx
