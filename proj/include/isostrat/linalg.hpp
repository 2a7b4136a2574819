#pragma once

#include "isostrat/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isostrat {

struct RrefResult {
    Matrix matrix;
    std::vector<std::size_t> pivots; // strictly increasing column indices
};

/// Reduced row echelon form over Q.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Canonical free-variable basis of {v : m v = 0}: one vector per non-pivot
/// column, with a 1 in that column and 0 in every other free column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Nonzero rows of the RREF of the given vectors: the unique reduced basis
/// of their span.
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t ambient);

std::size_t span_dimension(const std::vector<Vector>& vectors, std::size_t ambient);

/// Throws DimensionMismatch when the two families live in different spaces.
bool subspace_equal(const std::vector<Vector>& a, const std::vector<Vector>& b);

bool subspace_contains(const std::vector<Vector>& basis, const Vector& v);

/// Coordinates c with sum c_i basis_i = v, or nullopt if v is outside the
/// span. The basis must be linearly independent.
std::optional<Vector> coordinates_in(const std::vector<Vector>& basis, const Vector& v);

/// Linear forms vanishing exactly on span(basis), as a canonical basis.
std::vector<Vector> annihilator(const std::vector<Vector>& basis, std::size_t ambient);

/// Throws NonInvertibleGenerator if singular.
Matrix inverse(const Matrix& m);

Scalar determinant(Matrix m);

/// Coefficients c_0..c_n of det(t I - m), c_n = 1.
Vector characteristic_polynomial(const Matrix& m);

/// A subspace of Q^n held in canonical (RREF row) form, so equal subspaces
/// compare equal.
class LinearSubspace {
public:
    LinearSubspace() = default;
    LinearSubspace(std::size_t ambient, const std::vector<Vector>& spanning, std::string label = {});

    static LinearSubspace whole(std::size_t ambient, std::string label = {});
    static LinearSubspace kernel_of(const Matrix& m, std::string label = {});

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::string& label() const { return label_; }

    bool contains(const Vector& v) const;
    bool contains(const LinearSubspace& other) const;
    std::vector<Vector> annihilator() const;

    friend bool operator==(const LinearSubspace& a, const LinearSubspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::string label_;
};

} // namespace isostrat
