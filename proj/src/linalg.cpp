#include "isostrat/linalg.hpp"

#include "isostrat/errors.hpp"

#include <utility>

namespace isostrat {

RrefResult rref(Matrix m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t k = c; k < cols; ++k)
                std::swap(m(p, k), m(r, k));
        if (m(r, c) != 1) {
            Scalar inv = 1 / m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m(r, k)) != 0)
                    m(r, k) *= inv;
        }
        std::vector<std::size_t> support;
        for (std::size_t k = c + 1; k < cols; ++k)
            if (sgn(m(r, k)) != 0)
                support.push_back(k);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Scalar f = m(i, c);
            m(i, c) = 0;
            for (std::size_t k : support)
                m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m)
{
    auto [red, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vector v(cols, Scalar(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t ambient)
{
    if (vectors.empty())
        return {};
    auto [red, pivots] = rref(Matrix::from_rows(vectors, ambient));
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        basis.push_back(red.row_vector(i));
    return basis;
}

std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t ambient)
{
    if (vectors.empty())
        return 0;
    return rank(Matrix::from_rows(vectors, ambient));
}

namespace {

std::size_t common_ambient(const std::vector<Vector>& a, const std::vector<Vector>& b)
{
    std::size_t n = 0;
    bool seen = false;
    for (const auto* family : {&a, &b})
        for (const auto& v : *family) {
            if (seen && v.size() != n)
                throw DimensionMismatch("vectors of different ambient dimension");
            n = v.size();
            seen = true;
        }
    return n;
}

} // namespace

bool subspace_equal(const std::vector<Vector>& a, const std::vector<Vector>& b)
{
    std::size_t n = common_ambient(a, b);
    std::size_t ra = span_dimension(a, n);
    std::size_t rb = span_dimension(b, n);
    if (ra != rb)
        return false;
    std::vector<Vector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_dimension(both, n) == ra;
}

bool subspace_contains(const std::vector<Vector>& basis, const Vector& v)
{
    if (is_zero(v))
        return true;
    if (basis.empty())
        return false;
    common_ambient(basis, {v});
    std::vector<Vector> both = basis;
    both.push_back(v);
    return span_dimension(both, v.size()) == span_dimension(basis, v.size());
}

std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v)
{
    const std::size_t m = basis.size();
    if (m == 0)
        return is_zero(v) ? std::optional<Vector>(Vector{}) : std::nullopt;
    common_ambient(basis, {v});
    // Augmented system [b_1 ... b_m | v].
    Matrix aug(v.size(), m + 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j)
            aug(i, j) = basis[j][i];
        aug(i, m) = v[i];
    }
    auto [red, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == m)
        return std::nullopt;
    if (pivots.size() != m)
        throw ValidationError("coordinates_in: basis is linearly dependent");
    Vector c(m);
    for (std::size_t i = 0; i < m; ++i)
        c[i] = red(i, m);
    return c;
}

std::vector<Vector> annihilator(const std::vector<Vector>& basis, std::size_t ambient)
{
    if (basis.empty()) {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < ambient; ++i) {
            Vector e(ambient, Scalar(0));
            e[i] = 1;
            all.push_back(std::move(e));
        }
        return all;
    }
    return kernel_basis(Matrix::from_rows(basis, ambient));
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square())
        throw NonInvertibleGenerator("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto [red, pivots] = rref(std::move(aug));
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        throw NonInvertibleGenerator("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = red(i, n + j);
    return inv;
}

Scalar determinant(Matrix m)
{
    if (!m.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k)
                std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            Scalar f = m(i, c) / m(c, c);
            for (std::size_t k = c; k < n; ++k)
                m(i, k) -= f * m(c, k);
        }
    }
    return det;
}

Vector characteristic_polynomial(const Matrix& m)
{
    // Faddeev-LeVerrier.
    if (!m.is_square())
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Vector c(n + 1, Scalar(0));
    c[n] = 1;
    Matrix mk(n, n);
    const Matrix id = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * (mk + id * c[n - k + 1]);
        c[n - k] = -mk.trace() / Scalar(static_cast<long>(k));
    }
    return c;
}

LinearSubspace::LinearSubspace(std::size_t ambient, const std::vector<Vector>& spanning,
                               std::string label)
    : ambient_(ambient), basis_(row_space_basis(spanning, ambient)), label_(std::move(label))
{
}

LinearSubspace LinearSubspace::whole(std::size_t ambient, std::string label)
{
    std::vector<Vector> e;
    for (std::size_t i = 0; i < ambient; ++i) {
        Vector v(ambient, Scalar(0));
        v[i] = 1;
        e.push_back(std::move(v));
    }
    return LinearSubspace(ambient, e, std::move(label));
}

LinearSubspace LinearSubspace::kernel_of(const Matrix& m, std::string label)
{
    return LinearSubspace(m.cols(), kernel_basis(m), std::move(label));
}

bool LinearSubspace::contains(const Vector& v) const
{
    if (v.size() != ambient_)
        throw DimensionMismatch("vector of length " + std::to_string(v.size())
                                + " tested against a subspace of Q^" + std::to_string(ambient_));
    return subspace_contains(basis_, v);
}

bool LinearSubspace::contains(const LinearSubspace& other) const
{
    if (other.ambient_ != ambient_)
        throw DimensionMismatch("subspaces of different ambient spaces");
    for (const auto& v : other.basis_)
        if (!contains(v))
            return false;
    return true;
}

std::vector<Vector> LinearSubspace::annihilator() const
{
    return isostrat::annihilator(basis_, ambient_);
}

} // namespace isostrat
