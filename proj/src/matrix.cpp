#include "semicyclic/matrix.hpp"

#include <sstream>

namespace semicyclic {

Matrix::Matrix(const FieldSpecPtr& spec, int rows, int cols)
    : spec_(spec), rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * cols, CycScalar::zero(spec)) {}

Matrix Matrix::identity(const FieldSpecPtr& spec, int n) {
    Matrix m(spec, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycScalar::one(spec);
    return m;
}

Matrix Matrix::zero(const FieldSpecPtr& spec, int rows, int cols) {
    return Matrix(spec, rows, cols);
}

bool Matrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
        if (data_[i] != rhs.data_[i]) return false;
    return true;
}

void Matrix::require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw ParameterError("Matrix: shape mismatch");
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& e : m.data_) e = -e;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (size_t i = 0; i < data_.size(); ++i)
        if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ParameterError("Matrix: product shape mismatch");
    Matrix out(lhs.spec_ ? lhs.spec_ : rhs.spec_, lhs.rows_, rhs.cols_);
    for (int i = 0; i < lhs.rows_; ++i) {
        for (int k = 0; k < lhs.cols_; ++k) {
            const CycScalar& a = lhs.at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const CycScalar& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix operator*(const CycScalar& s, Matrix m) {
    for (auto& e : m.data_)
        if (!e.is_zero()) e *= s;
    return m;
}

Matrix Matrix::pow(long e) const {
    if (rows_ != cols_) throw ParameterError("Matrix::pow: square matrix required");
    if (e < 0) throw ParameterError("Matrix::pow: negative exponent");
    Matrix acc = identity(spec_, rows_);
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Matrix Matrix::transpose() const {
    Matrix m(spec_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.spec_ ? a.spec_ : b.spec_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int ra = 0; ra < a.rows_; ++ra)
        for (int ca = 0; ca < a.cols_; ++ca) {
            const CycScalar& va = a.at(ra, ca);
            if (va.is_zero()) continue;
            for (int rb = 0; rb < b.rows_; ++rb)
                for (int cb = 0; cb < b.cols_; ++cb) {
                    const CycScalar& vb = b.at(rb, cb);
                    if (vb.is_zero()) continue;
                    out.at(ra * b.rows_ + rb, ca * b.cols_ + cb) = va * vb;
                }
        }
    return out;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ParameterError("Matrix::inverse: square matrix required");
    Matrix work = *this;
    Matrix inv = identity(spec_, rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r) {
            if (!work.at(r, col).is_zero() && work.at(r, col).is_monomial()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            for (int r = col; r < rows_; ++r)
                if (!work.at(r, col).is_zero())
                    throw UnsupportedDivisionError(
                        "Matrix::inverse: no invertible pivot in column " + std::to_string(col));
            throw DivisionByZeroError("Matrix::inverse: singular matrix");
        }
        if (pivot != col) {
            for (int c = 0; c < cols_; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        }
        CycScalar piv_inv = work.at(col, col).inverse();
        for (int c = 0; c < cols_; ++c) {
            if (!work.at(col, c).is_zero()) work.at(col, c) *= piv_inv;
            if (!inv.at(col, c).is_zero()) inv.at(col, c) *= piv_inv;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col) continue;
            CycScalar factor = work.at(r, col);
            if (factor.is_zero()) continue;
            for (int c = 0; c < cols_; ++c) {
                if (!work.at(col, c).is_zero()) work.at(r, c) -= factor * work.at(col, c);
                if (!inv.at(col, c).is_zero()) inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

bool Matrix::a_free() const {
    for (const auto& e : data_)
        if (!e.a_free()) return false;
    return true;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << "[ ";
        for (int c = 0; c < cols_; ++c) {
            os << at(r, c).to_string();
            if (c + 1 < cols_) os << ", ";
        }
        os << " ]\n";
    }
    return os.str();
}

} // namespace semicyclic
