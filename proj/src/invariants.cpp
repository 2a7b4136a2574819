#include "isostrat/invariants.hpp"

#include "isostrat/errors.hpp"
#include "isostrat/series.hpp"

#include <algorithm>
#include <map>

namespace isostrat {

namespace {

void check_variables(const Representation& rep, const Poly& p)
{
    if (p.variables() != rep.variables())
        throw DimensionMismatch("polynomial is not written in the coordinates of V");
}

/// Images of every degree-d monomial under p -> p(M v), built degree by
/// degree from images of lower monomials.
std::vector<Poly> monomial_images(const Matrix& m, const std::vector<std::string>& vars,
                                  unsigned d)
{
    const std::size_t n = vars.size();
    std::vector<Poly> forms;
    for (std::size_t i = 0; i < n; ++i)
        forms.push_back(Poly::linear(vars, m.row_vector(i)));

    std::map<Exponent, Poly, GrlexGreater> level;
    level.emplace(Exponent(n, 0), Poly::constant(vars, 1));
    for (unsigned k = 1; k <= d; ++k) {
        std::map<Exponent, Poly, GrlexGreater> next;
        for (const auto& e : monomial_exponents(n, k)) {
            std::size_t i = 0;
            while (e[i] == 0)
                ++i;
            Exponent lower = e;
            lower[i] -= 1;
            next.emplace(e, level.at(lower) * forms[i]);
        }
        level = std::move(next);
    }
    std::vector<Poly> out;
    for (const auto& e : monomial_exponents(n, d))
        out.push_back(level.at(e));
    return out;
}

std::vector<std::size_t> distinct_generators(const Representation& rep)
{
    std::vector<std::size_t> gens;
    for (auto s : rep.group().generator_indices())
        if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end())
            gens.push_back(s);
    return gens;
}

void exponent_vectors(const std::vector<unsigned>& weights, unsigned target, std::size_t i,
                      std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out)
{
    if (i == weights.size()) {
        if (target == 0)
            out.push_back(cur);
        return;
    }
    if (weights[i] == 0) {
        cur[i] = 0;
        exponent_vectors(weights, target, i + 1, cur, out);
        return;
    }
    for (unsigned k = 0; k * weights[i] <= target; ++k) {
        cur[i] = k;
        exponent_vectors(weights, target - k * weights[i], i + 1, cur, out);
    }
    cur[i] = 0;
}

} // namespace

InvariantBasisAtDegree invariant_basis(const Representation& rep, unsigned d)
{
    const auto& vars = rep.variables();
    const auto monomials = monomial_exponents(vars.size(), d);
    const std::size_t count = monomials.size();

    // Column j of `sum` is sum_g (m_j o rho(g)); its image is the fixed space.
    Matrix sum(count, count);
    for (std::size_t g = 0; g < rep.group().order(); ++g) {
        auto images = monomial_images(rep.action(g), vars, d);
        for (std::size_t j = 0; j < count; ++j)
            for (const auto& [e, c] : images[j].terms()) {
                auto it = std::lower_bound(monomials.begin(), monomials.end(), e, GrlexGreater{});
                sum(static_cast<std::size_t>(it - monomials.begin()), j) += c;
            }
    }

    InvariantBasisAtDegree out;
    out.degree = d;
    auto rows = row_space_basis(
        [&] {
            std::vector<Vector> cols;
            for (std::size_t j = 0; j < count; ++j)
                cols.push_back(sum.column(j));
            return cols;
        }(),
        count);
    for (const auto& r : rows)
        out.basis.push_back(from_coefficients(vars, monomials, r));

    for (auto s : distinct_generators(rep)) {
        const Matrix inv = rep.action(rep.group().inverse(s));
        for (const auto& p : out.basis)
            if (act(inv, p) != p)
                throw Error("internal: Reynolds image is not fixed by a generator");
    }
    return out;
}

Poly reynolds(const Representation& rep, const Poly& p)
{
    check_variables(rep, p);
    Poly sum(p.variables());
    for (std::size_t g = 0; g < rep.group().order(); ++g)
        sum += act(rep.action(g), p);
    return sum * Scalar(1, static_cast<unsigned long>(rep.group().order()));
}

std::vector<std::size_t> molien_dims(const Representation& rep, unsigned up_to)
{
    const std::size_t n = rep.dimension();
    std::map<Vector, std::size_t, decltype([](const Vector& a, const Vector& b) {
                 return lex_less(a, b);
             })>
        multiplicity;
    for (std::size_t g = 0; g < rep.group().order(); ++g)
        ++multiplicity[characteristic_polynomial(rep.action(g))];

    TruncatedSeries total(up_to);
    for (const auto& [charpoly, mult] : multiplicity) {
        // det(I - t M) = sum_j c_{n-j} t^j
        Vector coeffs(n + 1);
        for (std::size_t j = 0; j <= n; ++j)
            coeffs[j] = charpoly[n - j];
        TruncatedSeries term = TruncatedSeries(up_to, coeffs).inverse();
        term *= Scalar(static_cast<long>(mult));
        total += term;
    }
    total *= Scalar(1, static_cast<unsigned long>(rep.group().order()));

    std::vector<std::size_t> dims;
    for (unsigned k = 0; k <= up_to; ++k) {
        const Scalar& c = total[k];
        if (c.get_den() != 1 || sgn(c) < 0)
            throw Error("internal: Molien coefficient is not a natural number");
        dims.push_back(c.get_num().get_ui());
    }
    return dims;
}

LinearSubspace graded_span(const std::vector<Poly>& polys, unsigned d)
{
    if (polys.empty())
        throw InputError("graded_span needs at least one polynomial");
    const auto& vars = polys.front().variables();
    const auto monomials = monomial_exponents(vars.size(), d);
    std::vector<unsigned> weights;
    for (const auto& p : polys) {
        if (!p.is_homogeneous())
            throw InputError("graded_span needs homogeneous polynomials");
        weights.push_back(p.is_zero() ? 0U : static_cast<unsigned>(std::max(p.degree(), 0)));
    }
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> cur(polys.size(), 0);
    exponent_vectors(weights, d, 0, cur, exps);

    std::vector<Vector> vectors;
    for (const auto& e : exps) {
        Poly prod = Poly::constant(vars, 1);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0)
                prod = prod * polys[k].pow(e[k]);
        if (d == 0 || !prod.is_zero())
            vectors.push_back(coefficients_on(prod, monomials));
    }
    return LinearSubspace(monomials.size(), vectors);
}

GeneratorSet minimal_generators(const Representation& rep, std::optional<unsigned> bound,
                                unsigned degree_cap)
{
    const auto& vars = rep.variables();
    unsigned requested = bound ? *bound : static_cast<unsigned>(rep.group().order());
    GeneratorSet set;
    set.bound = std::min(requested, degree_cap);
    set.complete = requested <= degree_cap;

    const auto molien = molien_dims(rep, set.bound);
    std::vector<InvariantBasisAtDegree> by_degree(set.bound + 1);
    for (unsigned d = 1; d <= set.bound; ++d) {
        const auto monomials = monomial_exponents(vars.size(), d);

        // Every invariant of degree < d is already generated, so the
        // decomposables are g_k times invariants of the complementary degree.
        std::vector<Vector> span;
        for (std::size_t k = 0; k < set.generators.size(); ++k) {
            unsigned rest = d - set.degrees[k];
            if (rest == 0 || rest >= d)
                continue;
            for (const auto& b : by_degree[rest].basis)
                span.push_back(coefficients_on(set.generators[k] * b, monomials));
        }
        span = row_space_basis(span, monomials.size());
        std::size_t decomposable = span.size();

        // When the decomposables already have the Molien dimension they are
        // the whole invariant space, and their RREF basis is the canonical one.
        if (decomposable == molien[d]) {
            by_degree[d].degree = d;
            for (const auto& v : span)
                by_degree[d].basis.push_back(from_coefficients(vars, monomials, v));
        } else {
            by_degree[d] = invariant_basis(rep, d);
        }

        GeneratorDegreeRecord record{d, by_degree[d].basis.size(), decomposable, 0};
        std::size_t current = decomposable;
        for (const auto& b : by_degree[d].basis) {
            span.push_back(coefficients_on(b, monomials));
            std::size_t r = span_dimension(span, monomials.size());
            if (r > current) {
                current = r;
                set.generators.push_back(b);
                set.degrees.push_back(d);
                ++record.new_generators;
            } else {
                span.pop_back();
            }
        }
        set.certificate.push_back(record);
    }
    return set;
}

InvarianceCheck verify_invariant(const Representation& rep, const Poly& p)
{
    check_variables(rep, p);
    InvarianceCheck check;
    for (auto s : distinct_generators(rep))
        if (act(rep.action(rep.group().inverse(s)), p) != p) {
            check.invariant = false;
            check.failing_element = s;
            return check;
        }
    for (const auto& l : rep.lie())
        if (!apply_vector_field(l.matrix, p).is_zero()) {
            check.invariant = false;
            check.failing_lie_generator = l.name;
            return check;
        }
    return check;
}

} // namespace isostrat
