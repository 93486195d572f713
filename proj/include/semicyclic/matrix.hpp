#pragma once

#include "semicyclic/cyclo.hpp"

namespace semicyclic {

/**
 * Dense rectangular matrix over CycScalar. Entry (r, c) is row r, column c;
 * M * e_c reads off column c. Multiplication skips zero entries, which keeps
 * products of the structurally sparse braiding operators cheap.
 */
class Matrix {
  public:
    Matrix() = default;
    Matrix(const FieldSpecPtr& spec, int rows, int cols);

    static Matrix identity(const FieldSpecPtr& spec, int n);
    static Matrix zero(const FieldSpecPtr& spec, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpecPtr& spec() const { return spec_; }

    CycScalar& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const CycScalar& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(const CycScalar& s, Matrix m);

    Matrix pow(long e) const;
    Matrix transpose() const;
    /// Kronecker product, strand 0 most significant in the combined index.
    static Matrix kron(const Matrix& a, const Matrix& b);

    /**
     * Exact inverse by Gauss-Jordan elimination. Pivots are chosen among
     * invertible (monomial-in-a) entries; a column with no such pivot raises
     * UnsupportedDivisionError, a singular matrix raises DivisionByZeroError.
     */
    Matrix inverse() const;

    /// True if every entry has a-degree 0.
    bool a_free() const;

    std::string to_string() const;

  private:
    FieldSpecPtr spec_;
    int rows_ = 0, cols_ = 0;
    std::vector<CycScalar> data_;
    void require_same_shape(const Matrix& rhs) const;
};

} // namespace semicyclic
