#pragma once
#include <map>
#include <utility>

#include "hopfx/hopf.hpp"

namespace hopfx {

// Sparse element of H (x) H keyed by basis index pairs.  Entries may carry
// explicit zeros after cancellation; comparisons ignore them.
using PairKey = std::pair<uint32_t, uint32_t>;
using Sp2 = std::map<PairKey, Scalar>;

void sp2_add(Sp2& t, uint32_t a, uint32_t b, const Scalar& c);
Sp2 sp2_outer(const Vec& x, const Vec& y);
Sp2 sp2_unit(const HopfAlgebra& h);  // 1 (x) 1
Sp2 sp2_flip(const Sp2& t);
Sp2 sp2_from_tensor2(const Tensor2& t);
Tensor2 sp2_to_tensor2(const FieldSpec& f, uint32_t d1, uint32_t d2, const Sp2& t);
Sp2 sp2_comult(const HopfAlgebra& h, const Vec& v);  // Delta(v)

// componentwise product in the algebra H (x) H
Sp2 sp2_mult(const HopfAlgebra& h, const Sp2& x, const Sp2& y);
// apply a matrix to one tensor leg
Sp2 sp2_apply_leg1(const ExactMatrix& m, const Sp2& t);
Sp2 sp2_apply_leg2(const ExactMatrix& m, const Sp2& t);

bool sp2_equal(const Sp2& x, const Sp2& y);
bool sp2_is_zero(const Sp2& x);

}  // namespace hopfx
