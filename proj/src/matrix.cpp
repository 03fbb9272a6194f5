#include "hopfx/matrix.hpp"

#include <stdexcept>

namespace hopfx {

ExactMatrix ExactMatrix::identity(const FieldSpec& f, size_t n) {
    ExactMatrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(f, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix r = *this;
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] += o.d_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix r = *this;
    for (size_t i = 0; i < d_.size(); ++i) r.d_[i] = r.d_[i] - o.d_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix r(f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j).addmul(a, b);
            }
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Scalar& s) const {
    ExactMatrix r = *this;
    for (auto& v : r.d_) v = v * s;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

ExactMatrix ExactMatrix::pow(unsigned long e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    ExactMatrix acc = identity(f_, rows_);
    ExactMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Scalar ExactMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
    Scalar t = Scalar::zero(f_);
    for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : d_)
        if (!v.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

std::vector<Scalar> ExactMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(f_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i].addmul(at(i, j), v[j]);
        }
    return r;
}

Scalar ExactMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = rows_;
    if (n == 0) return Scalar::one(f_);
    ExactMatrix w = *this;
    Scalar prev = Scalar::one(f_);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        // deterministic pivot: first nonzero entry in column k at or below row k
        size_t piv = k;
        while (piv < n && w.at(piv, k).is_zero()) ++piv;
        if (piv == n) return Scalar::zero(f_);
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Scalar num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // exact by the Bareiss identity
            }
            w.at(i, k) = Scalar::zero(f_);
        }
        prev = w.at(k, k);
    }
    Scalar det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

Echelon rref(const ExactMatrix& m) {
    Echelon e{m, {}};
    ExactMatrix& w = e.mat;
    size_t row = 0;
    for (size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        size_t piv = row;
        while (piv < w.rows() && w.at(piv, col).is_zero()) ++piv;
        if (piv == w.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < w.cols(); ++j) std::swap(w.at(row, j), w.at(piv, j));
        Scalar inv = w.at(row, col).inverse();
        for (size_t j = col; j < w.cols(); ++j) w.at(row, j) = w.at(row, j) * inv;
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == row || w.at(i, col).is_zero()) continue;
            Scalar c = w.at(i, col);
            for (size_t j = col; j < w.cols(); ++j) w.at(i, j) = w.at(i, j) - c * w.at(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m) {
    const FieldSpec& f = m.field();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.mat.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> linear_solve(const ExactMatrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("linear_solve shape mismatch");
    const FieldSpec& f = a.field();
    ExactMatrix aug(f, a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = rref(aug);
    // inconsistent iff the last column is a pivot
    for (size_t c : e.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    std::vector<Scalar> x(a.cols(), Scalar::zero(f));
    for (size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.mat.at(r, a.cols());
    return x;
}

std::optional<ExactMatrix> matrix_inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const FieldSpec& f = m.field();
    size_t n = m.rows();
    ExactMatrix aug(f, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(f);
    }
    Echelon e = rref(aug);
    for (size_t i = 0; i < n; ++i)
        if (i >= e.pivot_cols.size() || e.pivot_cols[i] != i) return std::nullopt;
    ExactMatrix inv(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
    return inv;
}

namespace {

// Incremental reduced echelon container used by the Krylov loop.
struct EchelonSpan {
    const FieldSpec f;
    size_t dim;
    // rows kept reduced; pivot[i] = leading column of rows[i], strictly increasing order not enforced,
    // but each pivot column appears once and rows are normalized.
    std::vector<std::vector<Scalar>> rows;
    std::vector<size_t> pivots;

    explicit EchelonSpan(const FieldSpec& field, size_t d) : f(field), dim(d) {}

    // Reduce v against the span in place; returns the leading index or dim when v reduces to zero.
    size_t reduce(std::vector<Scalar>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Scalar& c = v[pivots[r]];
            if (c.is_zero()) continue;
            Scalar k = c;
            for (size_t j = 0; j < dim; ++j)
                if (!rows[r][j].is_zero()) v[j] = v[j] - k * rows[r][j];
        }
        for (size_t j = 0; j < dim; ++j)
            if (!v[j].is_zero()) return j;
        return dim;
    }

    bool contains(std::vector<Scalar> v) const { return reduce(v) == dim; }

    // Insert; returns false when v was already in the span.
    bool insert(std::vector<Scalar> v) {
        size_t lead = reduce(v);
        if (lead == dim) return false;
        Scalar inv = v[lead].inverse();
        for (auto& c : v) c = c * inv;
        rows.push_back(std::move(v));
        pivots.push_back(lead);
        return true;
    }

    size_t rank() const { return rows.size(); }
};

}  // namespace

Polynomial minimal_polynomial_op(const FieldSpec& f, size_t dim,
                                 const std::function<std::vector<Scalar>(const std::vector<Scalar>&)>& op) {
    if (dim == 0) return Polynomial::one(f);
    Polynomial m = Polynomial::one(f);
    EchelonSpan global(f, dim);
    for (size_t s = 0; s < dim && global.rank() < dim; ++s) {
        std::vector<Scalar> e(dim, Scalar::zero(f));
        e[s] = Scalar::one(f);
        if (global.contains(e)) continue;  // annihilator divides the lcm collected so far
        // local Krylov chain from e with combination tracking
        std::vector<std::vector<Scalar>> combos;  // combos[r] expresses reduced row r in powers of op
        EchelonSpan local(f, dim);
        std::vector<Scalar> v = e;
        std::vector<Scalar> local_min;
        for (size_t k = 0;; ++k) {
            std::vector<Scalar> combo(k + 1, Scalar::zero(f));
            combo[k] = Scalar::one(f);
            std::vector<Scalar> w = v;
            // reduce with tracking
            for (size_t r = 0; r < local.rows.size(); ++r) {
                const Scalar& c = w[local.pivots[r]];
                if (c.is_zero()) continue;
                Scalar kk = c;
                for (size_t j = 0; j < dim; ++j)
                    if (!local.rows[r][j].is_zero()) w[j] = w[j] - kk * local.rows[r][j];
                for (size_t j = 0; j < combos[r].size(); ++j) combo[j] = combo[j] - kk * combos[r][j];
            }
            size_t lead = dim;
            for (size_t j = 0; j < dim; ++j)
                if (!w[j].is_zero()) {
                    lead = j;
                    break;
                }
            if (lead == dim) {
                // first dependence: combo is the monic local annihilator (leading coeff 1 by construction)
                local_min = std::move(combo);
                break;
            }
            Scalar inv = w[lead].inverse();
            for (auto& c : w) c = c * inv;
            for (auto& c : combo) c = c * inv;
            local.rows.push_back(std::move(w));
            local.pivots.push_back(lead);
            combos.push_back(std::move(combo));
            v = op(v);
        }
        Polynomial g = Polynomial::from_coeffs(f, std::move(local_min));
        m = (m * g) / poly_gcd(m, g);  // lcm, stays monic
        for (auto& row : local.rows) global.insert(std::move(row));
    }
    return m;
}

Polynomial krylov_annihilator(const FieldSpec& f, std::vector<Scalar> start,
                              const std::function<std::vector<Scalar>(const std::vector<Scalar>&)>& step) {
    size_t dim = start.size();
    std::vector<std::vector<Scalar>> rows;
    std::vector<size_t> pivots;
    std::vector<std::vector<Scalar>> combos;
    std::vector<Scalar> v = std::move(start);
    for (size_t k = 0;; ++k) {
        std::vector<Scalar> combo(k + 1, Scalar::zero(f));
        combo[k] = Scalar::one(f);
        std::vector<Scalar> w = v;
        for (size_t r = 0; r < rows.size(); ++r) {
            const Scalar& c = w[pivots[r]];
            if (c.is_zero()) continue;
            Scalar kk = c;
            for (size_t j = 0; j < dim; ++j)
                if (!rows[r][j].is_zero()) w[j] = w[j] - kk * rows[r][j];
            for (size_t j = 0; j < combos[r].size(); ++j) combo[j] = combo[j] - kk * combos[r][j];
        }
        size_t lead = dim;
        for (size_t j = 0; j < dim; ++j)
            if (!w[j].is_zero()) {
                lead = j;
                break;
            }
        // reductions only touch lower positions, so combo stays monic of degree k
        if (lead == dim) return Polynomial::from_coeffs(f, std::move(combo));
        Scalar inv = w[lead].inverse();
        for (auto& c : w) c = c * inv;
        for (auto& c : combo) c = c * inv;
        rows.push_back(std::move(w));
        pivots.push_back(lead);
        combos.push_back(std::move(combo));
        v = step(v);
    }
}

Polynomial minimal_polynomial(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial of non-square matrix");
    return minimal_polynomial_op(m.field(), m.rows(), [&](const std::vector<Scalar>& v) { return m.apply(v); });
}

ExactMatrix eval_poly_at(const Polynomial& p, const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of non-square matrix");
    ExactMatrix acc(m.field(), m.rows(), m.rows());
    ExactMatrix pw = ExactMatrix::identity(m.field(), m.rows());
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) pw = pw * m;
        if (!p.coeffs()[i].is_zero()) acc = acc + pw * p.coeffs()[i];
    }
    return acc;
}

}  // namespace hopfx
