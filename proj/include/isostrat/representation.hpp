#pragma once

#include "isostrat/group.hpp"
#include "isostrat/linalg.hpp"
#include "isostrat/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isostrat {

enum class RepresentationKind { Permutation, Matrix, Harmonic };

struct LieGenerator {
    std::string name;
    Matrix matrix; // action on V
};

/// H^d(R^3): homogeneous harmonic polynomials of degree d in x, y, z, with
/// the free-variable basis of ker(Laplacian) on grlex monomials. The
/// coordinates of a harmonic polynomial are its coefficients on the free
/// monomials.
class HarmonicSpace {
public:
    explicit HarmonicSpace(unsigned degree);

    unsigned degree() const { return degree_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Poly>& basis() const { return basis_; }
    static const std::vector<std::string>& space_variables();

    /// Throws ValidationError if p is not a harmonic form of this degree.
    Vector coordinates(const Poly& p) const;
    Poly polynomial(const Vector& coords) const;

    /// Matrix of p -> p o g^-1 for an orthogonal 3x3 g.
    Matrix action(const Matrix& g) const;
    /// Matrix of the derivation induced by the linear vector field A.
    Matrix derivation(const Matrix& a) const;
    /// Gram matrix of the O(3)-invariant apolar form sum_alpha alpha! p_a q_a.
    Matrix apolar_gram() const;

private:
    unsigned degree_;
    std::vector<Exponent> monomials_;
    std::vector<std::size_t> free_;
    std::vector<Poly> basis_;
};

/// so(3) generators as 3x3 matrices: rotations about x, y, z.
std::vector<LieGenerator> so3_generators();

/// A finite group acting linearly on V = Q^n, with an optional Lie algebra
/// acting by derivation matrices and an invariant inner product.
class Representation {
public:
    /// `group` is closed on source matrices; `action` gives rho of each
    /// element in the group's element order. Validates the homomorphism, the
    /// Lie bracket closure and the inner product invariance.
    Representation(RepresentationKind kind, std::vector<std::string> variables,
                   FiniteMatrixGroup group, std::vector<Matrix> action,
                   std::vector<LieGenerator> lie, Matrix inner_product,
                   std::optional<HarmonicSpace> harmonic = std::nullopt);

    RepresentationKind kind() const { return kind_; }
    std::size_t dimension() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const FiniteMatrixGroup& group() const { return group_; }
    const Matrix& action(std::size_t element) const { return action_[element]; }
    const std::vector<LieGenerator>& lie() const { return lie_; }
    bool has_lie() const { return !lie_.empty(); }
    const Matrix& inner_product() const { return inner_; }
    const std::optional<HarmonicSpace>& harmonic() const { return harmonic_; }

    /// rho of an arbitrary source matrix (need not be a group element).
    Matrix action_of_source(const Matrix& source) const;
    const LieGenerator& lie_generator(const std::string& name) const;

private:
    RepresentationKind kind_;
    std::vector<std::string> variables_;
    FiniteMatrixGroup group_;
    std::vector<Matrix> action_;
    std::vector<LieGenerator> lie_;
    Matrix inner_;
    std::optional<HarmonicSpace> harmonic_;
};

/// Matrix sending e_j to e_perm[j]; perm in one-line notation on {1..n}.
/// Throws ValidationError if perm is not a permutation of {1..n}.
Matrix permutation_matrix(const std::vector<std::size_t>& perm, std::size_t n);

/// Permutations in one-line notation on {1..n}.
Representation permutation_rep(const std::vector<std::vector<std::size_t>>& permutations,
                               std::size_t n, std::vector<std::string> variables = {},
                               std::size_t cap = kDefaultGroupCap);

/// Without an explicit inner product the group average of the identity form
/// is used.
Representation matrix_rep(const std::vector<Matrix>& generators,
                          std::vector<LieGenerator> lie = {},
                          std::optional<Matrix> inner_product = std::nullopt,
                          std::vector<std::string> variables = {},
                          std::size_t cap = kDefaultGroupCap);

/// Rotation group data given by 3x3 rational orthogonal generators.
Representation harmonic_rep(unsigned degree, const std::vector<Matrix>& generators,
                            bool include_so3_lie, std::vector<std::string> variables = {},
                            std::size_t cap = kDefaultGroupCap);

/// A closed subgroup given by finite generators and Lie algebra elements,
/// both as matrices acting on V.
struct ClosedSubgroupSpec {
    std::string label;
    std::vector<Matrix> finite;
    std::vector<Matrix> lie;
};

Subgroup stabilizer(const Representation& rep, const Vector& v);

LinearSubspace fixed_locus(const Representation& rep, const ClosedSubgroupSpec& h);
LinearSubspace fixed_locus(const Representation& rep, const Subgroup& h);

/// (1/|H|) sum_h tr rho(h).
Scalar character_dimension(const Representation& rep, const Subgroup& h);

/// {c : sum_i c_i X_i v = 0} in coordinates of the Lie generators.
LinearSubspace lie_stabilizer_algebra(const Representation& rep, const Vector& v);

struct SliceResult {
    LinearSubspace tangent; // E_v
    LinearSubspace slice;   // orthogonal complement of E_v
};

SliceResult orthogonal_slice(const Representation& rep, const Vector& v);

/// Elements g of the finite group with rho(g) W subset of W.
Subgroup setwise_stabilizer(const Representation& rep, const LinearSubspace& w);

/// Matrix of a linear map that preserves span(basis), in that basis.
Matrix restricted_matrix(const Matrix& map, const std::vector<Vector>& basis);

} // namespace isostrat
