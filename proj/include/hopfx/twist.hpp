#pragma once
#include "hopfx/tensorops.hpp"

namespace hopfx {

// A Drinfeld twist J for a fixed parent: invertible in H (x) H, counital,
// and satisfying the cocycle identity (Delta (x) I)(J) J12 = (I (x) Delta)(J) J23.
struct Twist {
    HopfAlgebra parent;
    Tensor2 j;
    Tensor2 j_inverse;
};

struct TwistReport {
    bool invertible = false;
    bool cocycle = false;
    bool counital = false;
    std::string detail;
    bool all() const { return invertible && cocycle && counital; }
};

TwistReport verify_twist(const HopfAlgebra& h, const Tensor2& j);

// Inverse of j inside H (x) H through its left-regular action; nullopt when singular.
std::optional<Tensor2> tensor_square_inverse(const HopfAlgebra& h, const Tensor2& j);

// H^J: identical algebra, Delta^J = J^{-1} Delta J, counit unchanged, antipode
// solved afresh as the convolution inverse of the identity.  Verifies the
// twist and the result; throws on either failure.
HopfAlgebra apply_twist(const HopfAlgebra& h, const Tensor2& j);

// R^J = J21^{-1} R J, the quasitriangular structure of a twisted double.
Tensor2 twist_r_matrix(const HopfAlgebra& h, const Tensor2& r, const Tensor2& j);

// J = sum beta(chi, psi) e_chi (x) e_psi over the characters of the abelian
// group A generated by the given grouplikes, with e_chi its orthogonal
// idempotents.  The table is indexed by the character order this function
// fixes: characters enumerate as exponent tuples over the given generators in
// lexicographic order (so index 0 is the trivial character).  Any normalized
// 2-cocycle table is accepted; bicharacters are the motivating special case.
// Throws when the grouplikes do not commute, the field lacks the needed roots
// of unity, |A| is not invertible, or the table is not a normalized cocycle.
Twist bicharacter_twist(const HopfAlgebra& h, const std::vector<Vec>& grouplike_gens,
                        const std::vector<std::vector<Scalar>>& table);

// A primitive n-th root of unity in f, when one exists.
std::optional<Scalar> field_root_of_unity(const FieldSpec& f, unsigned n);

}  // namespace hopfx
