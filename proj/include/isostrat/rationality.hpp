#pragma once

#include "isostrat/polynomial.hpp"

#include <string>
#include <vector>

namespace isostrat {

inline constexpr unsigned kDefaultRationalizeCap = 16;

/// Global invariants J_k restricted to a subspace W = span(b_1..b_m),
/// written in the coordinates s_1..s_m of that basis.
struct RestrictedInvariantSet {
    std::vector<std::string> names;       // one symbol per invariant
    std::vector<Poly> restricted;         // j_k in the subspace coordinates
    std::vector<unsigned> degrees;        // deg J_k
    std::vector<bool> vanishes;           // j_k == 0 on W
    std::vector<Vector> basis;            // b_1..b_m
    std::vector<std::string> coordinates; // s1..sm

    std::size_t size() const { return names.size(); }
};

RestrictedInvariantSet restrict_invariants(const std::vector<std::string>& names,
                                           const std::vector<Poly>& invariants,
                                           const std::vector<Vector>& basis,
                                           std::vector<std::string> coordinates = {});

/// The monodromy action on the subspace coordinates: every group element
/// as a matrix, plus Lie algebra elements preserving the subspace.
struct MonodromyAction {
    std::vector<Matrix> finite;
    std::vector<Matrix> lie;
};

/// target = A(j) / B(j), A and B polynomials in the invariant symbols.
struct RationalExpression {
    Poly numerator;
    Poly denominator;           // unit leading coefficient in grlex order
    Vector witness;             // point of W where B(j) != 0
    Scalar denominator_at_witness;
    unsigned bound = 0;         // weighted degree bound that produced it
};

std::string to_string(const RationalExpression& e);

/// Weighted degree of a polynomial in the invariant symbols.
unsigned weighted_degree(const Poly& p, const std::vector<unsigned>& weights);

/// Solves target * B(j) = A(j) with weighted degrees <= max_weighted_degree.
/// Throws TargetNotMonodromyInvariant or NoSolutionWithinBound.
RationalExpression rationalize_at_bound(const Poly& target, const RestrictedInvariantSet& j,
                                        const MonodromyAction& monodromy,
                                        unsigned max_weighted_degree);

/// Starts at max(deg target, max deg j_k) and doubles the bound on failure
/// up to `cap`.
RationalExpression rationalize(const Poly& target, const RestrictedInvariantSet& j,
                               const MonodromyAction& monodromy,
                               unsigned cap = kDefaultRationalizeCap);

/// A1(j) B2(j) == A2(j) B1(j) identically on the subspace.
bool expressions_equivalent(const RationalExpression& a, const RationalExpression& b,
                            const RestrictedInvariantSet& j);

/// A(j), B(j) as polynomials on the subspace.
Poly evaluate_on_subspace(const Poly& symbols_poly, const RestrictedInvariantSet& j);

/// Deterministic witness points in Q^m: (1^k, 2^k, ..., m^k) for k = 1..8,
/// then Kronecker points (t, t^(D+1), t^((D+1)^2), ...) for t = 2, 3, ...
/// The first point where p does not vanish; p must be nonzero.
Vector nonvanishing_witness(const Poly& p);

} // namespace isostrat
