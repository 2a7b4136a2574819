#pragma once

#include "isostrat/scalar.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace isostrat {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
    static Matrix diagonal(const Vector& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const
    {
        return {data_.data() + r * cols_, cols_};
    }
    Vector row_vector(std::size_t r) const;
    Vector column(std::size_t c) const;
    const std::vector<Scalar>& entries() const { return data_; }

    Matrix transpose() const;
    Scalar trace() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar& s) { return lhs *= s; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend Vector operator*(const Matrix& lhs, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Total order on (shape, entries); used to key element lookups.
    friend bool operator<(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Vertically stacks matrices with equal column counts.
Matrix vstack(std::span<const Matrix> blocks);

/// [A, B] = AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

} // namespace isostrat
