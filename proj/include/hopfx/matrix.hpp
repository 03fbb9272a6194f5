#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "hopfx/polynomial.hpp"

namespace hopfx {

// Dense matrix over one exact field, row-major.
class ExactMatrix {
  public:
    ExactMatrix() : f_(FieldSpec::rationals()) {}
    ExactMatrix(const FieldSpec& f, size_t rows, size_t cols)
        : f_(f), rows_(rows), cols_(cols), d_(rows * cols, Scalar::zero(f)) {}

    static ExactMatrix identity(const FieldSpec& f, size_t n);
    static ExactMatrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows);

    const FieldSpec& field() const { return f_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Scalar& at(size_t i, size_t j) const { return d_[i * cols_ + j]; }
    Scalar& at(size_t i, size_t j) { return d_[i * cols_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Scalar& s) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    ExactMatrix pow(unsigned long e) const;
    Scalar trace() const;
    bool is_zero() const;
    bool is_identity() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v

    Scalar determinant() const;  // fraction-free elimination

  private:
    FieldSpec f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> d_;
};

// Reduced row echelon form together with the pivot columns.
struct Echelon {
    ExactMatrix mat;
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
};
Echelon rref(const ExactMatrix& m);

// Basis of the right kernel in reduced echelon form; deterministic.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m);

// One exact solution of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> linear_solve(const ExactMatrix& a, const std::vector<Scalar>& b);

// Exact inverse, or nullopt when singular.
std::optional<ExactMatrix> matrix_inverse(const ExactMatrix& m);

// Monic polynomial of least degree annihilating the square matrix M,
// via Krylov subspaces from each standard basis vector.
Polynomial minimal_polynomial(const ExactMatrix& m);

// Same, but with the operator given as a black box (used where materializing
// the matrix is too big); dim is the ambient dimension, op must be linear.
Polynomial minimal_polynomial_op(const FieldSpec& f, size_t dim,
                                 const std::function<std::vector<Scalar>(const std::vector<Scalar>&)>& op);

// Monic annihilator of the single Krylov chain start, step(start), step^2(start), ...
// (the minimal polynomial of the chain, not of the whole operator).
Polynomial krylov_annihilator(const FieldSpec& f, std::vector<Scalar> start,
                              const std::function<std::vector<Scalar>(const std::vector<Scalar>&)>& step);

// Evaluate a polynomial at a matrix argument.
ExactMatrix eval_poly_at(const Polynomial& p, const ExactMatrix& m);

}  // namespace hopfx
