#pragma once

#include "isostrat/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isostrat {

inline constexpr unsigned kDefaultGeneratorDegreeCap = 12;

struct InvariantBasisAtDegree {
    unsigned degree = 0;
    std::vector<Poly> basis; // RREF basis on the grlex monomials of this degree
};

/// Canonical basis of the degree-d invariants of the finite group. The
/// invariant space is computed as the image of the Reynolds projector on
/// the monomial basis and each vector is checked against every generator.
InvariantBasisAtDegree invariant_basis(const Representation& rep, unsigned d);

/// (1/|G|) sum_g g . p
Poly reynolds(const Representation& rep, const Poly& p);

/// Coefficients 0..up_to of (1/|G|) sum_g 1/det(I - t rho(g)).
std::vector<std::size_t> molien_dims(const Representation& rep, unsigned up_to);

struct GeneratorDegreeRecord {
    unsigned degree = 0;
    std::size_t invariant_dim = 0;
    std::size_t decomposable_dim = 0;
    std::size_t new_generators = 0;
};

struct GeneratorSet {
    std::vector<Poly> generators;
    std::vector<unsigned> degrees;
    unsigned bound = 0;       // highest degree examined
    bool complete = false;    // false when the Noether bound was cut by the cap
    std::vector<GeneratorDegreeRecord> certificate;
};

/// Degree-ascending greedy extension of the decomposable invariants. The
/// default bound is |G|; it is clipped to `degree_cap`, in which case the
/// result is flagged incomplete.
GeneratorSet minimal_generators(const Representation& rep, std::optional<unsigned> bound = {},
                                unsigned degree_cap = kDefaultGeneratorDegreeCap);

/// Span, in degree-d monomial coordinates, of all products of the given
/// homogeneous polynomials that have total degree d.
LinearSubspace graded_span(const std::vector<Poly>& polys, unsigned d);

struct InvarianceCheck {
    bool invariant = true;
    std::optional<std::size_t> failing_element;
    std::optional<std::string> failing_lie_generator;
};

/// g . p = p for every finite generator and X . p = 0 for every Lie
/// generator.
InvarianceCheck verify_invariant(const Representation& rep, const Poly& p);

} // namespace isostrat
