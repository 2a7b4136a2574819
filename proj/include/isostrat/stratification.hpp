#pragma once

#include "isostrat/rationality.hpp"
#include "isostrat/representation.hpp"

#include <optional>
#include <vector>

namespace isostrat {

inline constexpr std::size_t kDefaultEquationCap = 2000;

struct StratumRecord {
    std::size_t id = 0;
    std::size_t subgroup_class = 0; // index into the subgroup lattice
    Subgroup representative;
    LinearSubspace fixed;
    Vector witness;                 // stabilizer is exactly the representative
    std::vector<std::size_t> covers; // ids of the classes directly below this one
};

/// Isotropy classes ordered by (|H| descending, representative).
struct Stratification {
    SubgroupLattice lattice;
    std::vector<StratumRecord> classes;

    /// [classes[a]] precedes-or-equals [classes[b]] in the containment order.
    bool precedes(const FiniteMatrixGroup& g, std::size_t a, std::size_t b) const;
    /// Id of the stratum whose class contains h; throws NotAnIsotropyClass.
    std::size_t id_of(const Subgroup& h) const;
};

Stratification isotropy_classes(const Representation& rep);

/// A rational point of V^H with stabilizer exactly H, or nullopt when V^H
/// equals the fixed locus of a strictly larger subgroup.
std::optional<Vector> open_fixed_witness(const Representation& rep, const Subgroup& h,
                                         const SubgroupLattice& lattice);
std::optional<Vector> open_fixed_witness(const Representation& rep, const Subgroup& h);

/// Unique minimal class of the poset, cross-checked against the stabilizer
/// of a deterministic generic point.
std::size_t principal_isotropy(const Representation& rep, const Stratification& strat);

/// Sample point (1^k, 2^k, ..., m^k) combined with the given basis.
Vector sample_point(const std::vector<Vector>& basis, std::size_t ambient, unsigned k);

struct MonodromyRep {
    QuotientGroup gamma;          // N(H)/H
    std::vector<Vector> basis;    // basis of V^H the matrices refer to
    std::vector<Matrix> matrices; // one per coset representative
    bool faithful = false;
};

/// Throws NotAnIsotropyClass. When `basis` is given it must be a basis of
/// V^H; otherwise the canonical basis is used.
MonodromyRep monodromy_rep(const Representation& rep, const Subgroup& h,
                           const std::optional<std::vector<Vector>>& basis = std::nullopt);

/// Group elements mapping span(basis) to itself and the Lie algebra
/// elements preserving it, as matrices in that basis. For the fixed locus
/// of an isotropy subgroup H the finite part is the action of N(H).
MonodromyAction subspace_symmetries(const Representation& rep, const std::vector<Vector>& basis);

/// Products over the cosets g_1..g_r of G/N(H) of annihilator forms of V^H
/// evaluated at g_t^-1 x, one per choice function. Their common zero set is
/// the union of the g V^H.
std::vector<Poly> closed_stratum_equations(const Representation& rep, const Subgroup& h,
                                           std::size_t cap = kDefaultEquationCap);

/// True when v lies in g V^H for some g (direct oracle).
bool in_closed_stratum(const Representation& rep, const Subgroup& h, const Vector& v);

std::size_t stratum_membership(const Representation& rep, const Stratification& strat,
                               const Vector& v);

} // namespace isostrat
