#include "isostrat/stratification.hpp"

#include "isostrat/errors.hpp"

#include <algorithm>
#include <map>

namespace isostrat {

Vector sample_point(const std::vector<Vector>& basis, std::size_t ambient, unsigned k)
{
    Vector p(ambient, Scalar(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        mpz_class base = static_cast<unsigned long>(i + 1);
        mpz_class c;
        mpz_pow_ui(c.get_mpz_t(), base.get_mpz_t(), k);
        for (std::size_t r = 0; r < ambient; ++r)
            if (sgn(basis[i][r]) != 0)
                p[r] += Scalar(c) * basis[i][r];
    }
    return p;
}

namespace {

// Linear forms restricted to the sample curve k -> (1^k, ..., m^k) have
// finitely many zeros, so this many attempts always suffices in practice;
// hitting it means an internal inconsistency.
constexpr unsigned kMaxSamples = 4096;

} // namespace

std::optional<Vector> open_fixed_witness(const Representation& rep, const Subgroup& h,
                                         const SubgroupLattice& lattice)
{
    LinearSubspace fixed = fixed_locus(rep, h);

    // Q^m is never a finite union of proper subspaces: H is an isotropy
    // subgroup iff no strictly larger subgroup has the same fixed locus.
    for (const auto& cls : lattice.classes)
        for (const auto& k : cls.members)
            if (k.order() > h.order() && h.is_subset_of(k) && fixed_locus(rep, k) == fixed)
                return std::nullopt;

    for (unsigned k = 1; k <= kMaxSamples; ++k) {
        Vector p = sample_point(fixed.basis(), rep.dimension(), k);
        if (stabilizer(rep, p) == h)
            return p;
        if (fixed.dimension() == 0)
            break;
    }
    throw Error("internal: no open fixed witness found for an isotropy subgroup");
}

std::optional<Vector> open_fixed_witness(const Representation& rep, const Subgroup& h)
{
    return open_fixed_witness(rep, h, enumerate_subgroups(rep.group()));
}

bool Stratification::precedes(const FiniteMatrixGroup& g, std::size_t a, std::size_t b) const
{
    return subconjugate(g, classes[a].representative, classes[b].representative);
}

std::size_t Stratification::id_of(const Subgroup& h) const
{
    std::size_t cls = lattice.class_of(h);
    for (const auto& r : classes)
        if (r.subgroup_class == cls)
            return r.id;
    throw NotAnIsotropyClass("subgroup class is not an isotropy class");
}

Stratification isotropy_classes(const Representation& rep)
{
    const auto& g = rep.group();
    Stratification strat;
    strat.lattice = enumerate_subgroups(g);
    for (std::size_t c = 0; c < strat.lattice.classes.size(); ++c) {
        const auto& h = strat.lattice.classes[c].representative;
        auto witness = open_fixed_witness(rep, h, strat.lattice);
        if (!witness)
            continue;
        StratumRecord rec;
        rec.id = strat.classes.size();
        rec.subgroup_class = c;
        rec.representative = h;
        rec.fixed = fixed_locus(rep, h);
        rec.witness = std::move(*witness);
        strat.classes.push_back(std::move(rec));
    }

    const std::size_t n = strat.classes.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            below[a][b] = a != b && strat.precedes(g, a, b);
    for (std::size_t top = 0; top < n; ++top)
        for (std::size_t low = 0; low < n; ++low) {
            if (!below[low][top])
                continue;
            bool direct = true;
            for (std::size_t mid = 0; mid < n && direct; ++mid)
                if (below[low][mid] && below[mid][top])
                    direct = false;
            if (direct)
                strat.classes[top].covers.push_back(low);
        }
    return strat;
}

std::size_t principal_isotropy(const Representation& rep, const Stratification& strat)
{
    const auto& g = rep.group();
    std::vector<std::size_t> minimal;
    for (std::size_t a = 0; a < strat.classes.size(); ++a) {
        bool is_min = true;
        for (std::size_t b = 0; b < strat.classes.size() && is_min; ++b)
            if (b != a && strat.precedes(g, b, a))
                is_min = false;
        if (is_min)
            minimal.push_back(a);
    }
    if (minimal.size() != 1)
        throw Error("internal: isotropy poset has no unique minimal class");

    // Generic points avoid every proper fixed subspace, so their stabilizer
    // is the kernel of the action.
    std::vector<std::size_t> kernel;
    const Matrix id = Matrix::identity(rep.dimension());
    for (std::size_t e = 0; e < g.order(); ++e)
        if (rep.action(e) == id)
            kernel.push_back(e);
    Subgroup trivial_action(g, kernel);
    const auto whole = LinearSubspace::whole(rep.dimension());
    for (unsigned k = 1; k <= kMaxSamples; ++k) {
        Vector p = sample_point(whole.basis(), rep.dimension(), k);
        Subgroup s = stabilizer(rep, p);
        if (s == trivial_action) {
            if (strat.id_of(s) != minimal.front())
                throw Error("internal: generic stabilizer disagrees with the poset minimum");
            return minimal.front();
        }
    }
    throw Error("internal: no generic sample point found");
}

MonodromyRep monodromy_rep(const Representation& rep, const Subgroup& h,
                           const std::optional<std::vector<Vector>>& basis)
{
    const auto& g = rep.group();
    if (!open_fixed_witness(rep, h))
        throw NotAnIsotropyClass("subgroup is not an isotropy subgroup");
    LinearSubspace fixed = fixed_locus(rep, h);

    MonodromyRep out;
    if (basis) {
        if (basis->size() != fixed.dimension()
            || span_dimension(*basis, rep.dimension()) != basis->size()
            || !subspace_equal(*basis, fixed.basis()))
            throw ValidationError("supplied basis is not a basis of the fixed locus");
        out.basis = *basis;
    } else {
        out.basis = fixed.basis();
    }

    Subgroup n = normalizer(g, h);
    out.gamma = quotient(g, n, h);
    for (auto r : out.gamma.representatives)
        out.matrices.push_back(restricted_matrix(rep.action(r), out.basis));

    const Matrix id = Matrix::identity(out.basis.size());
    std::vector<std::size_t> kernel;
    for (auto e : n.elements())
        if (restricted_matrix(rep.action(e), out.basis) == id)
            kernel.push_back(e);
    out.faithful = kernel == h.elements();
    return out;
}

std::vector<Poly> closed_stratum_equations(const Representation& rep, const Subgroup& h,
                                           std::size_t cap)
{
    const auto& g = rep.group();
    LinearSubspace fixed = fixed_locus(rep, h);
    auto forms = fixed.annihilator();
    if (forms.empty())
        return {};
    Subgroup n = normalizer(g, h);
    auto cosets = left_coset_representatives(g, Subgroup::whole(g), n);

    const std::size_t c = forms.size();
    const std::size_t r = cosets.size();
    std::size_t total = 1;
    for (std::size_t t = 0; t < r; ++t) {
        if (total > cap / c + 1)
            throw CapExceeded("closed stratum needs more than " + std::to_string(cap)
                              + " equations");
        total *= c;
    }
    if (total > cap)
        throw CapExceeded("closed stratum needs " + std::to_string(total)
                          + " equations, more than the cap " + std::to_string(cap));

    // shifted[t][i] = l_i(g_t^-1 x)
    std::vector<std::vector<Poly>> shifted(r);
    for (std::size_t t = 0; t < r; ++t) {
        const Matrix& inv = rep.action(g.inverse(cosets[t]));
        for (const auto& l : forms) {
            Vector row = inv.transpose() * l;
            shifted[t].push_back(Poly::linear(rep.variables(), row));
        }
    }

    std::vector<Poly> equations;
    std::vector<std::size_t> choice(r, 0);
    while (true) {
        Poly prod = Poly::constant(rep.variables(), 1);
        for (std::size_t t = 0; t < r; ++t)
            prod = prod * shifted[t][choice[t]];
        if (std::find(equations.begin(), equations.end(), prod) == equations.end())
            equations.push_back(std::move(prod));
        std::size_t t = r;
        while (t > 0 && ++choice[t - 1] == c) {
            choice[t - 1] = 0;
            --t;
        }
        if (t == 0)
            break;
    }
    return equations;
}

bool in_closed_stratum(const Representation& rep, const Subgroup& h, const Vector& v)
{
    const auto& g = rep.group();
    LinearSubspace fixed = fixed_locus(rep, h);
    for (std::size_t e = 0; e < g.order(); ++e)
        if (fixed.contains(rep.action(g.inverse(e)) * v))
            return true;
    return false;
}

MonodromyAction subspace_symmetries(const Representation& rep, const std::vector<Vector>& basis)
{
    const std::size_t n = rep.dimension();
    LinearSubspace w(n, basis);
    if (w.dimension() != basis.size())
        throw ValidationError("subspace basis is not linearly independent");
    MonodromyAction out;
    Subgroup keeps = setwise_stabilizer(rep, w);
    for (auto e : keeps.elements())
        out.finite.push_back(restricted_matrix(rep.action(e), basis));

    // c with (sum_i c_i X_i) b in W for every basis vector b.
    auto forms = w.annihilator();
    const auto& lie = rep.lie();
    if (lie.empty() || forms.empty()) {
        for (const auto& l : lie)
            out.lie.push_back(restricted_matrix(l.matrix, basis));
        return out;
    }
    Matrix conditions(forms.size() * basis.size(), lie.size());
    for (std::size_t i = 0; i < lie.size(); ++i)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Vector image = lie[i].matrix * basis[b];
            for (std::size_t f = 0; f < forms.size(); ++f)
                conditions(b * forms.size() + f, i) = dot(forms[f], image);
        }
    for (const auto& c : kernel_basis(conditions)) {
        Matrix x(n, n);
        for (std::size_t i = 0; i < lie.size(); ++i)
            x = x + lie[i].matrix * c[i];
        out.lie.push_back(restricted_matrix(x, basis));
    }
    return out;
}

std::size_t stratum_membership(const Representation& rep, const Stratification& strat,
                               const Vector& v)
{
    return strat.id_of(stabilizer(rep, v));
}

} // namespace isostrat
