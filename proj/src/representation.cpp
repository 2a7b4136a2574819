#include "isostrat/representation.hpp"

#include "isostrat/errors.hpp"

#include <algorithm>

namespace isostrat {

namespace {

bool is_orthogonal(const Matrix& g)
{
    return g.is_square() && g.transpose() * g == Matrix::identity(g.rows());
}

Vector flatten(const Matrix& m) { return m.entries(); }

bool positive_definite(Matrix m)
{
    // Symmetric Gaussian elimination without pivoting; all pivots must be
    // positive.
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(m(k, k)) <= 0)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(m(i, k)) == 0)
                continue;
            Scalar f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return true;
}

std::vector<std::string> default_variables(std::size_t n, const std::string& prefix)
{
    if (n <= 3 && prefix == "x") {
        std::vector<std::string> xyz{"x", "y", "z"};
        return {xyz.begin(), xyz.begin() + static_cast<std::ptrdiff_t>(n)};
    }
    return numbered_names(prefix, n);
}

Scalar factorial_product(const Exponent& e)
{
    mpz_class acc = 1;
    for (auto k : e)
        for (unsigned i = 2; i <= k; ++i)
            acc *= i;
    return Scalar(acc);
}

} // namespace

HarmonicSpace::HarmonicSpace(unsigned degree)
    : degree_(degree), monomials_(monomial_exponents(3, degree))
{
    const auto& vars = space_variables();
    if (degree < 2) {
        for (std::size_t i = 0; i < monomials_.size(); ++i)
            free_.push_back(i);
    } else {
        auto lower = monomial_exponents(3, degree - 2);
        Matrix lap(lower.size(), monomials_.size());
        for (std::size_t j = 0; j < monomials_.size(); ++j) {
            Vector col = coefficients_on(laplacian(Poly::monomial(vars, monomials_[j])), lower);
            for (std::size_t i = 0; i < lower.size(); ++i)
                lap(i, j) = col[i];
        }
        auto pivots = rref(lap).pivots;
        for (std::size_t j = 0; j < monomials_.size(); ++j)
            if (!std::binary_search(pivots.begin(), pivots.end(), j))
                free_.push_back(j);
        for (const auto& v : kernel_basis(lap))
            basis_.push_back(from_coefficients(vars, monomials_, v));
    }
    if (basis_.empty())
        for (auto f : free_)
            basis_.push_back(Poly::monomial(vars, monomials_[f]));
}

const std::vector<std::string>& HarmonicSpace::space_variables()
{
    static const std::vector<std::string> vars{"x", "y", "z"};
    return vars;
}

Vector HarmonicSpace::coordinates(const Poly& p) const
{
    if (p.variables() != space_variables())
        throw ValidationError("harmonic polynomials must be written in x, y, z");
    if (p.is_zero())
        return Vector(dimension(), Scalar(0));
    if (!p.is_homogeneous() || p.degree() != static_cast<int>(degree_))
        throw ValidationError("'" + to_string(p) + "' is not homogeneous of degree "
                              + std::to_string(degree_));
    if (!laplacian(p).is_zero())
        throw ValidationError("'" + to_string(p) + "' is not harmonic");
    Vector c(dimension());
    for (std::size_t i = 0; i < free_.size(); ++i)
        c[i] = p.coefficient(monomials_[free_[i]]);
    return c;
}

Poly HarmonicSpace::polynomial(const Vector& coords) const
{
    if (coords.size() != dimension())
        throw DimensionMismatch("harmonic coordinate vector has the wrong length");
    Poly p(space_variables());
    for (std::size_t i = 0; i < coords.size(); ++i)
        p += basis_[i] * coords[i];
    return p;
}

Matrix HarmonicSpace::action(const Matrix& g) const
{
    if (g.rows() != 3 || !is_orthogonal(g))
        throw ValidationError("harmonic representations need orthogonal 3x3 matrices");
    const Matrix g_inverse = g.transpose();
    Matrix m(dimension(), dimension());
    for (std::size_t j = 0; j < dimension(); ++j) {
        Vector c = coordinates(isostrat::act(g_inverse, basis_[j]));
        for (std::size_t i = 0; i < dimension(); ++i)
            m(i, j) = c[i];
    }
    return m;
}

Matrix HarmonicSpace::derivation(const Matrix& a) const
{
    Matrix m(dimension(), dimension());
    for (std::size_t j = 0; j < dimension(); ++j) {
        Vector c = coordinates(apply_vector_field(a, basis_[j]));
        for (std::size_t i = 0; i < dimension(); ++i)
            m(i, j) = c[i];
    }
    return m;
}

Matrix HarmonicSpace::apolar_gram() const
{
    Matrix gram(dimension(), dimension());
    for (std::size_t i = 0; i < dimension(); ++i)
        for (std::size_t j = i; j < dimension(); ++j) {
            Scalar acc = 0;
            for (const auto& [e, c] : basis_[i].terms()) {
                Scalar other = basis_[j].coefficient(e);
                if (sgn(other) != 0)
                    acc += factorial_product(e) * c * other;
            }
            gram(i, j) = acc;
            gram(j, i) = acc;
        }
    return gram;
}

std::vector<LieGenerator> so3_generators()
{
    auto m = [](std::vector<Vector> rows) { return Matrix::from_rows(rows, 3); };
    return {
        {"Lx", m({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}})},
        {"Ly", m({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}})},
        {"Lz", m({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}})},
    };
}

Representation::Representation(RepresentationKind kind, std::vector<std::string> variables,
                               FiniteMatrixGroup group, std::vector<Matrix> action,
                               std::vector<LieGenerator> lie, Matrix inner_product,
                               std::optional<HarmonicSpace> harmonic)
    : kind_(kind),
      variables_(std::move(variables)),
      group_(std::move(group)),
      action_(std::move(action)),
      lie_(std::move(lie)),
      inner_(std::move(inner_product)),
      harmonic_(std::move(harmonic))
{
    const std::size_t n = variables_.size();
    if (action_.size() != group_.order())
        throw ValidationError("one action matrix per group element is required");
    for (const auto& a : action_)
        if (a.rows() != n || a.cols() != n)
            throw DimensionMismatch("action matrix does not act on a space of dimension "
                                    + std::to_string(n));
    for (auto s : group_.generator_indices())
        for (std::size_t j = 0; j < group_.order(); ++j)
            if (action_[group_.multiply(s, j)] != action_[s] * action_[j])
                throw ValidationError("action matrices do not form a homomorphism");

    std::vector<Vector> lie_flat;
    for (const auto& l : lie_) {
        if (l.matrix.rows() != n || l.matrix.cols() != n)
            throw DimensionMismatch("Lie generator '" + l.name + "' has the wrong size");
        lie_flat.push_back(flatten(l.matrix));
    }
    for (std::size_t i = 0; i < lie_.size(); ++i)
        for (std::size_t j = i + 1; j < lie_.size(); ++j)
            if (!subspace_contains(lie_flat, flatten(commutator(lie_[i].matrix, lie_[j].matrix))))
                throw ValidationError("Lie generators are not closed under brackets: ["
                                      + lie_[i].name + ", " + lie_[j].name + "]");

    if (inner_.rows() != n || inner_.cols() != n)
        throw DimensionMismatch("inner product matrix has the wrong size");
    if (inner_.transpose() != inner_ || !positive_definite(inner_))
        throw ValidationError("inner product is not symmetric positive definite");
    for (auto s : group_.generator_indices())
        if (action_[s].transpose() * inner_ * action_[s] != inner_)
            throw ValidationError("inner product is not invariant under the group");
    for (const auto& l : lie_)
        if (!(l.matrix.transpose() * inner_ + inner_ * l.matrix).is_zero())
            throw ValidationError("inner product is not invariant under Lie generator '"
                                  + l.name + "'");
}

Matrix Representation::action_of_source(const Matrix& source) const
{
    if (harmonic_)
        return harmonic_->action(source);
    if (source.rows() != dimension() || source.cols() != dimension())
        throw DimensionMismatch("matrix does not act on V");
    return source;
}

const LieGenerator& Representation::lie_generator(const std::string& name) const
{
    for (const auto& l : lie_)
        if (l.name == name)
            return l;
    throw NoLieAction("no Lie generator named '" + name + "'");
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm, std::size_t n)
{
    if (perm.size() != n)
        throw ValidationError("permutation has length " + std::to_string(perm.size())
                              + ", expected " + std::to_string(n));
    std::vector<bool> hit(n, false);
    Matrix p(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (perm[j] < 1 || perm[j] > n || hit[perm[j] - 1])
            throw ValidationError("invalid permutation of {1.." + std::to_string(n) + "}");
        hit[perm[j] - 1] = true;
        p(perm[j] - 1, j) = 1;
    }
    return p;
}

Representation permutation_rep(const std::vector<std::vector<std::size_t>>& permutations,
                               std::size_t n, std::vector<std::string> variables,
                               std::size_t cap)
{
    if (permutations.empty())
        throw InputError("at least one permutation is required");
    std::vector<Matrix> gens;
    for (const auto& perm : permutations)
        gens.push_back(permutation_matrix(perm, n));
    if (variables.empty())
        variables = default_variables(n, "x");
    if (variables.size() != n)
        throw DimensionMismatch("variable list length differs from the degree");
    auto group = FiniteMatrixGroup::close(gens, cap);
    auto action = group.elements();
    return Representation(RepresentationKind::Permutation, std::move(variables), std::move(group),
                          std::move(action), {}, Matrix::identity(n));
}

Representation matrix_rep(const std::vector<Matrix>& generators, std::vector<LieGenerator> lie,
                          std::optional<Matrix> inner_product, std::vector<std::string> variables,
                          std::size_t cap)
{
    if (generators.empty())
        throw InputError("at least one generator is required");
    const std::size_t n = generators.front().rows();
    if (variables.empty())
        variables = default_variables(n, "x");
    if (variables.size() != n)
        throw DimensionMismatch("variable list length differs from the dimension");
    auto group = FiniteMatrixGroup::close(generators, cap);
    auto action = group.elements();
    Matrix inner(n, n);
    if (inner_product) {
        inner = *inner_product;
    } else {
        for (const auto& g : action)
            inner = inner + g.transpose() * g;
        inner *= Scalar(1, static_cast<unsigned long>(group.order()));
    }
    return Representation(RepresentationKind::Matrix, std::move(variables), std::move(group),
                          std::move(action), std::move(lie), std::move(inner));
}

Representation harmonic_rep(unsigned degree, const std::vector<Matrix>& generators,
                            bool include_so3_lie, std::vector<std::string> variables,
                            std::size_t cap)
{
    HarmonicSpace space(degree);
    std::vector<Matrix> gens = generators;
    if (gens.empty())
        gens.push_back(Matrix::identity(3));
    for (const auto& g : gens)
        if (g.rows() != 3 || g.cols() != 3 || !is_orthogonal(g))
            throw ValidationError("harmonic representation generators must be orthogonal 3x3");
    auto group = FiniteMatrixGroup::close(gens, cap);
    std::vector<Matrix> action;
    action.reserve(group.order());
    for (const auto& g : group.elements())
        action.push_back(space.action(g));

    std::vector<LieGenerator> lie;
    if (include_so3_lie)
        for (const auto& l : so3_generators())
            lie.push_back({l.name, space.derivation(l.matrix)});

    if (variables.empty())
        variables = numbered_names("h", space.dimension());
    if (variables.size() != space.dimension())
        throw DimensionMismatch("variable list length differs from dim H^"
                                + std::to_string(degree));
    Matrix gram = space.apolar_gram();
    return Representation(RepresentationKind::Harmonic, std::move(variables), std::move(group),
                          std::move(action), std::move(lie), std::move(gram), std::move(space));
}

Subgroup stabilizer(const Representation& rep, const Vector& v)
{
    if (v.size() != rep.dimension())
        throw DimensionMismatch("vector of length " + std::to_string(v.size())
                                + " in a representation of dimension "
                                + std::to_string(rep.dimension()));
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < rep.group().order(); ++i)
        if (rep.action(i) * v == v)
            members.push_back(i);
    return Subgroup(rep.group(), std::move(members));
}

LinearSubspace fixed_locus(const Representation& rep, const ClosedSubgroupSpec& h)
{
    const std::size_t n = rep.dimension();
    std::vector<Matrix> blocks;
    const Matrix id = Matrix::identity(n);
    for (const auto& f : h.finite) {
        if (f.rows() != n || f.cols() != n)
            throw DimensionMismatch("subgroup generator does not act on V");
        blocks.push_back(f - id);
    }
    for (const auto& l : h.lie) {
        if (l.rows() != n || l.cols() != n)
            throw DimensionMismatch("subgroup Lie generator does not act on V");
        blocks.push_back(l);
    }
    if (blocks.empty())
        return LinearSubspace::whole(n, h.label);
    return LinearSubspace::kernel_of(vstack(blocks), h.label);
}

LinearSubspace fixed_locus(const Representation& rep, const Subgroup& h)
{
    ClosedSubgroupSpec spec;
    for (auto e : h.elements())
        if (e != 0)
            spec.finite.push_back(rep.action(e));
    return fixed_locus(rep, spec);
}

Scalar character_dimension(const Representation& rep, const Subgroup& h)
{
    Scalar sum = 0;
    for (auto e : h.elements())
        sum += rep.action(e).trace();
    return sum / Scalar(static_cast<long>(h.order()));
}

LinearSubspace lie_stabilizer_algebra(const Representation& rep, const Vector& v)
{
    if (!rep.has_lie())
        throw NoLieAction("representation has no Lie algebra action");
    if (v.size() != rep.dimension())
        throw DimensionMismatch("vector does not live in V");
    std::vector<Vector> columns;
    for (const auto& l : rep.lie())
        columns.push_back(l.matrix * v);
    return LinearSubspace::kernel_of(Matrix::from_columns(columns, rep.dimension()),
                                     "lie-stabilizer");
}

SliceResult orthogonal_slice(const Representation& rep, const Vector& v)
{
    const std::size_t n = rep.dimension();
    if (v.size() != n)
        throw DimensionMismatch("vector does not live in V");
    std::vector<Vector> tangent;
    for (const auto& l : rep.lie())
        tangent.push_back(l.matrix * v);
    LinearSubspace e(n, tangent, "tangent");
    if (e.dimension() == 0)
        return {e, LinearSubspace::whole(n, "slice")};
    Matrix forms = Matrix::from_rows(e.basis(), n) * rep.inner_product();
    return {e, LinearSubspace::kernel_of(forms, "slice")};
}

Subgroup setwise_stabilizer(const Representation& rep, const LinearSubspace& w)
{
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < rep.group().order(); ++i) {
        bool keeps = true;
        for (const auto& b : w.basis())
            if (!w.contains(rep.action(i) * b)) {
                keeps = false;
                break;
            }
        if (keeps)
            members.push_back(i);
    }
    return Subgroup(rep.group(), std::move(members));
}

Matrix restricted_matrix(const Matrix& map, const std::vector<Vector>& basis)
{
    const std::size_t m = basis.size();
    Matrix out(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        auto c = coordinates_in(basis, map * basis[j]);
        if (!c)
            throw ValidationError("map does not preserve the subspace");
        for (std::size_t i = 0; i < m; ++i)
            out(i, j) = (*c)[i];
    }
    return out;
}

} // namespace isostrat
