#pragma once

#include "isostrat/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace isostrat {

inline constexpr std::size_t kDefaultGroupCap = 10000;

/// Fully enumerated finite group of invertible matrices. Element 0 is the
/// identity; the remaining elements appear in breadth-first order from the
/// identity, right-multiplying by the generators in the order given.
class FiniteMatrixGroup {
public:
    FiniteMatrixGroup() = default;

    /// Throws GroupNotFiniteWithinCap or NonInvertibleGenerator.
    static FiniteMatrixGroup close(std::span<const Matrix> generators,
                                   std::size_t cap = kDefaultGroupCap);

    std::size_t order() const { return elements_.size(); }
    std::size_t dimension() const { return dim_; }
    const Matrix& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Matrix>& elements() const { return elements_; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    /// conjugate(x, h) = x h x^-1
    std::size_t conjugate(std::size_t x, std::size_t h) const
    {
        return multiply(multiply(x, h), inverse(x));
    }
    std::optional<std::size_t> index_of(const Matrix& m) const;
    /// Element indices of the given generators (duplicates kept).
    const std::vector<std::size_t>& generator_indices() const { return generators_; }

    /// Sorted element set of the subgroup generated by the given elements.
    std::vector<std::size_t> generated(std::span<const std::size_t> gens) const;

private:
    std::size_t dim_ = 0;
    std::vector<Matrix> elements_;
    std::map<Matrix, std::size_t> lookup_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> generators_;
};

/// A subgroup as a sorted set of element indices of its parent group.
class Subgroup {
public:
    Subgroup() = default;
    /// Validates closure under the parent's multiplication; throws NotASubgroup.
    Subgroup(const FiniteMatrixGroup& parent, std::vector<std::size_t> elements);

    static Subgroup whole(const FiniteMatrixGroup& g);
    static Subgroup trivial();

    const std::vector<std::size_t>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(std::size_t element) const;
    bool is_subset_of(const Subgroup& other) const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elements_ < b.elements_; }

private:
    std::vector<std::size_t> elements_;
};

Subgroup conjugate(const FiniteMatrixGroup& g, const Subgroup& h, std::size_t x);

struct SubgroupClass {
    Subgroup representative; // lexicographically minimal member
    std::vector<Subgroup> members;
};

/// Conjugacy classes of subgroups, ordered by order descending then by
/// representative.
struct SubgroupLattice {
    std::vector<SubgroupClass> classes;

    std::size_t class_of(const Subgroup& h) const;
    std::size_t subgroup_count() const;
};

SubgroupLattice enumerate_subgroups(const FiniteMatrixGroup& g, std::size_t cap = kDefaultGroupCap);

Subgroup normalizer(const FiniteMatrixGroup& g, const Subgroup& h);

bool is_normal(const FiniteMatrixGroup& g, const Subgroup& n, const Subgroup& h);

/// Witness x with x h1 x^-1 = h2, if any.
std::optional<std::size_t> are_conjugate(const FiniteMatrixGroup& g, const Subgroup& h1,
                                         const Subgroup& h2);

/// True if h1 is conjugate to a subgroup of h2.
bool subconjugate(const FiniteMatrixGroup& g, const Subgroup& h1, const Subgroup& h2);

/// Smallest element index of each left coset x k (x in `in`, k in `k`),
/// ordered increasingly.
std::vector<std::size_t> left_coset_representatives(const FiniteMatrixGroup& g,
                                                    const Subgroup& in, const Subgroup& k);

struct QuotientGroup {
    Subgroup numerator;
    Subgroup denominator;
    std::vector<std::size_t> representatives;
    std::vector<std::size_t> table; // coset index product, row-major

    std::size_t order() const { return representatives.size(); }
    std::size_t multiply(std::size_t a, std::size_t b) const
    {
        return table[a * order() + b];
    }
    bool is_abelian() const;
};

/// Throws NotNormal unless h is a normal subgroup of n.
QuotientGroup quotient(const FiniteMatrixGroup& g, const Subgroup& n, const Subgroup& h);

} // namespace isostrat
