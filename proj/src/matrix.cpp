#include "isostrat/matrix.hpp"

#include "isostrat/errors.hpp"

#include <string>

namespace isostrat {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch("row " + std::to_string(r) + " has length "
                                    + std::to_string(rows[r].size()) + ", expected "
                                    + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows)
{
    return from_rows(cols, rows).transpose();
}

Matrix Matrix::diagonal(const Vector& entries)
{
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

Vector Matrix::row_vector(std::size_t r) const
{
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Scalar Matrix::trace() const
{
    Scalar t = 0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
        t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference of different shapes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_)
        x *= s;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs)
{
    if (lhs.cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product " + std::to_string(lhs.rows_) + "x"
                                + std::to_string(lhs.cols_) + " * " + std::to_string(rhs.rows_)
                                + "x" + std::to_string(rhs.cols_));
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Scalar& a = lhs(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (sgn(rhs(k, j)) != 0)
                    out(i, j) += a * rhs(k, j);
        }
    return out;
}

Vector operator*(const Matrix& lhs, const Vector& v)
{
    if (lhs.cols_ != v.size())
        throw DimensionMismatch("matrix-vector product with vector of length "
                                + std::to_string(v.size()) + ", expected "
                                + std::to_string(lhs.cols_));
    Vector out(lhs.rows_, Scalar(0));
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k)
            if (sgn(lhs(i, k)) != 0 && sgn(v[k]) != 0)
                out[i] += lhs(i, k) * v[k];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_)
        return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_)
        return a.cols_ < b.cols_;
    return lex_less(a.data_, b.data_);
}

Matrix vstack(std::span<const Matrix> blocks)
{
    if (blocks.empty())
        return {};
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw DimensionMismatch("vstack of blocks with different column counts");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c)
                out(r0 + r, c) = b(r, c);
        r0 += b.rows();
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

} // namespace isostrat
