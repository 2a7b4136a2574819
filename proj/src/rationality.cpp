#include "isostrat/rationality.hpp"

#include "isostrat/errors.hpp"
#include "isostrat/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isostrat {

RestrictedInvariantSet restrict_invariants(const std::vector<std::string>& names,
                                           const std::vector<Poly>& invariants,
                                           const std::vector<Vector>& basis,
                                           std::vector<std::string> coordinates)
{
    if (names.size() != invariants.size())
        throw InputError("one name per invariant is required");
    if (coordinates.empty())
        coordinates = numbered_names("s", basis.size());
    RestrictedInvariantSet j;
    j.names = names;
    j.basis = basis;
    j.coordinates = coordinates;
    for (const auto& inv : invariants) {
        Poly r = restrict_to_subspace(inv, basis, coordinates);
        j.degrees.push_back(static_cast<unsigned>(std::max(inv.degree(), 0)));
        j.vanishes.push_back(r.is_zero());
        j.restricted.push_back(std::move(r));
    }
    return j;
}

std::string to_string(const RationalExpression& e)
{
    return "(" + to_string(e.numerator) + ")/(" + to_string(e.denominator) + ")";
}

unsigned weighted_degree(const Poly& p, const std::vector<unsigned>& weights)
{
    unsigned best = 0;
    for (const auto& [e, c] : p.terms()) {
        unsigned w = 0;
        for (std::size_t k = 0; k < e.size(); ++k)
            w += e[k] * weights[k];
        best = std::max(best, w);
    }
    return best;
}

Poly evaluate_on_subspace(const Poly& symbols_poly, const RestrictedInvariantSet& j)
{
    if (j.restricted.empty())
        return Poly(j.coordinates);
    return compose(symbols_poly, j.restricted);
}

Vector nonvanishing_witness(const Poly& p)
{
    if (p.is_zero())
        throw Error("no witness exists for the zero polynomial");
    const std::size_t m = p.variable_count();
    for (unsigned k = 1; k <= 8; ++k) {
        Vector w(m);
        for (std::size_t i = 0; i < m; ++i) {
            mpz_class base = static_cast<unsigned long>(i + 1);
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), k);
            w[i] = Scalar(power);
        }
        if (sgn(p.evaluate(w)) != 0)
            return w;
    }
    // Distinct monomials of degree <= D map to distinct powers of t, so the
    // univariate specialization is nonzero and has finitely many roots.
    const unsigned long step = static_cast<unsigned long>(std::max(p.degree(), 0)) + 1;
    for (unsigned long t = 2;; ++t) {
        Vector w(m);
        mpz_class exponent = 1;
        for (std::size_t i = 0; i < m; ++i) {
            mpz_class value;
            mpz_class base = t;
            mpz_pow_ui(value.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
            w[i] = Scalar(value);
            exponent *= step;
        }
        if (sgn(p.evaluate(w)) != 0)
            return w;
    }
}

namespace {

/// Exponent vectors over the symbols with weighted degree in [lo, hi];
/// symbols with weight 0 are excluded.
std::vector<Exponent> weighted_monomials(const std::vector<unsigned>& weights, unsigned lo,
                                         unsigned hi)
{
    std::vector<Exponent> out;
    Exponent cur(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned used) -> void {
        if (i == weights.size()) {
            if (used >= lo)
                out.push_back(cur);
            return;
        }
        if (weights[i] == 0) {
            self(self, i + 1, used);
            return;
        }
        for (unsigned k = 0; used + k * weights[i] <= hi; ++k) {
            cur[i] = k;
            self(self, i + 1, used + k * weights[i]);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    // Grlex on the symbols: canonical unknown order.
    std::sort(out.begin(), out.end(), GrlexGreater{});
    return out;
}

void check_monodromy_invariant(const Poly& target, const MonodromyAction& monodromy)
{
    for (const auto& g : monodromy.finite)
        if (act(g, target) != target)
            throw TargetNotMonodromyInvariant("target '" + to_string(target)
                                              + "' is not invariant under the monodromy group");
    for (const auto& l : monodromy.lie)
        if (!apply_vector_field(l, target).is_zero())
            throw TargetNotMonodromyInvariant(
                "target '" + to_string(target)
                + "' is not invariant under the monodromy Lie algebra");
}

struct Ansatz {
    std::vector<Exponent> denominator;
    std::vector<Exponent> numerator;
};

/// Solves one ansatz block. Unknowns are ordered B coefficients first, then
/// A coefficients; returns the first canonical kernel vector whose
/// denominator does not vanish on the subspace.
std::optional<std::pair<Poly, Poly>> solve_block(const Poly& target,
                                                 const RestrictedInvariantSet& j,
                                                 const std::vector<Poly>& symbol_images,
                                                 const Ansatz& ansatz)
{
    if (ansatz.denominator.empty())
        return std::nullopt;
    const auto& symbols = j.names;
    std::map<Exponent, Poly, GrlexGreater> image_cache;
    auto image = [&](const Exponent& e) -> const Poly& {
        auto it = image_cache.find(e);
        if (it != image_cache.end())
            return it->second;
        Poly p = Poly::constant(j.coordinates, 1);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0)
                p = p * symbol_images[k].pow(e[k]);
        return image_cache.emplace(e, std::move(p)).first->second;
    };

    std::vector<Poly> columns;
    for (const auto& e : ansatz.denominator)
        columns.push_back(target * image(e));
    for (const auto& e : ansatz.numerator)
        columns.push_back(-image(e));

    std::set<Exponent, GrlexGreater> support;
    for (const auto& c : columns)
        for (const auto& [e, coeff] : c.terms())
            support.insert(e);
    std::vector<Exponent> rows(support.begin(), support.end());

    Matrix system(rows.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [e, coeff] : columns[c].terms()) {
            auto it = std::lower_bound(rows.begin(), rows.end(), e, GrlexGreater{});
            system(static_cast<std::size_t>(it - rows.begin()), c) = coeff;
        }

    const std::size_t nb = ansatz.denominator.size();
    for (const auto& v : kernel_basis(system)) {
        Poly b(symbols);
        Poly a(symbols);
        for (std::size_t i = 0; i < nb; ++i)
            b.add_term(ansatz.denominator[i], v[i]);
        for (std::size_t i = 0; i < ansatz.numerator.size(); ++i)
            a.add_term(ansatz.numerator[i], v[nb + i]);
        if (b.is_zero())
            continue;
        if (evaluate_on_subspace(b, j).is_zero())
            continue; // spurious: B lies in the relations among the j_k
        return std::make_pair(std::move(a), std::move(b));
    }
    return std::nullopt;
}

} // namespace

RationalExpression rationalize_at_bound(const Poly& target, const RestrictedInvariantSet& j,
                                        const MonodromyAction& monodromy,
                                        unsigned max_weighted_degree)
{
    if (target.variables() != j.coordinates)
        throw DimensionMismatch("target must be written in the subspace coordinates");
    check_monodromy_invariant(target, monodromy);

    // Symbols whose restriction is zero or constant carry no information.
    std::vector<unsigned> weights;
    bool homogeneous = target.is_homogeneous();
    for (std::size_t k = 0; k < j.size(); ++k) {
        bool usable = !j.vanishes[k] && j.restricted[k].degree() > 0;
        weights.push_back(usable ? static_cast<unsigned>(j.restricted[k].degree()) : 0U);
        if (usable && !j.restricted[k].is_homogeneous())
            homogeneous = false;
    }

    auto finish = [&](Poly a, Poly b) {
        Scalar lc = b.leading_coefficient();
        a *= 1 / lc;
        b *= 1 / lc;
        if (target * evaluate_on_subspace(b, j) != evaluate_on_subspace(a, j))
            throw Error("internal: rational identity failed to verify");
        RationalExpression e{std::move(a), std::move(b), {}, 0, max_weighted_degree};
        Poly denominator_image = evaluate_on_subspace(e.denominator, j);
        e.witness = nonvanishing_witness(denominator_image);
        e.denominator_at_witness = denominator_image.evaluate(e.witness);
        return e;
    };

    if (target.is_zero())
        return finish(Poly(j.names), Poly::constant(j.names, 1));

    const unsigned target_degree = static_cast<unsigned>(target.degree());
    for (unsigned db = 0; db <= max_weighted_degree; ++db) {
        if (homogeneous) {
            unsigned da = target_degree + db;
            if (da > max_weighted_degree)
                break;
            Ansatz ansatz{weighted_monomials(weights, db, db), weighted_monomials(weights, da, da)};
            if (auto sol = solve_block(target, j, j.restricted, ansatz))
                return finish(std::move(sol->first), std::move(sol->second));
        } else {
            for (unsigned da = 0; da <= max_weighted_degree; ++da) {
                Ansatz ansatz{weighted_monomials(weights, 0, db),
                              weighted_monomials(weights, 0, da)};
                if (auto sol = solve_block(target, j, j.restricted, ansatz))
                    return finish(std::move(sol->first), std::move(sol->second));
            }
        }
    }
    throw NoSolutionWithinBound("no rational expression of weighted degree <= "
                                + std::to_string(max_weighted_degree) + " for '"
                                + to_string(target) + "'");
}

RationalExpression rationalize(const Poly& target, const RestrictedInvariantSet& j,
                               const MonodromyAction& monodromy, unsigned cap)
{
    unsigned bound = static_cast<unsigned>(std::max(target.degree(), 1));
    for (std::size_t k = 0; k < j.size(); ++k)
        bound = std::max(bound, j.degrees[k]);
    while (true) {
        unsigned effective = std::min(bound, cap);
        try {
            return rationalize_at_bound(target, j, monodromy, effective);
        } catch (const NoSolutionWithinBound&) {
            if (effective >= cap)
                throw NoSolutionWithinBound("no rational expression found up to the cap "
                                            + std::to_string(cap) + " for '" + to_string(target)
                                            + "' (inconclusive)");
        }
        bound *= 2;
    }
}

bool expressions_equivalent(const RationalExpression& a, const RationalExpression& b,
                            const RestrictedInvariantSet& j)
{
    if (a.numerator.variables() != b.numerator.variables()
        || a.denominator.variables() != b.denominator.variables())
        throw DimensionMismatch("expressions over different symbol sets");
    return evaluate_on_subspace(a.numerator, j) * evaluate_on_subspace(b.denominator, j)
           == evaluate_on_subspace(b.numerator, j) * evaluate_on_subspace(a.denominator, j);
}

} // namespace isostrat
