#include "isostrat/group.hpp"

#include "isostrat/errors.hpp"
#include "isostrat/linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace isostrat {

FiniteMatrixGroup FiniteMatrixGroup::close(std::span<const Matrix> generators, std::size_t cap)
{
    if (generators.empty())
        throw InputError("a finite group needs at least one generator");
    const std::size_t n = generators.front().rows();
    for (const auto& gen : generators) {
        if (!gen.is_square() || gen.rows() != n)
            throw DimensionMismatch("generators must be square matrices of one size");
        if (sgn(determinant(gen)) == 0)
            throw NonInvertibleGenerator("generator is singular");
    }

    FiniteMatrixGroup g;
    g.dim_ = n;
    auto add = [&g, cap](Matrix m) -> std::size_t {
        auto [it, inserted] = g.lookup_.try_emplace(m, g.elements_.size());
        if (inserted) {
            if (g.elements_.size() >= cap)
                throw GroupNotFiniteWithinCap("group closure exceeded the cap of "
                                              + std::to_string(cap) + " elements");
            g.elements_.push_back(std::move(m));
        }
        return it->second;
    };

    add(Matrix::identity(n));
    for (std::size_t i = 0; i < g.elements_.size(); ++i)
        for (const auto& gen : generators)
            add(g.elements_[i] * gen);
    for (const auto& gen : generators)
        g.generators_.push_back(g.lookup_.at(gen));

    const std::size_t order = g.elements_.size();
    g.table_.assign(order * order, 0);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            g.table_[a * order + b] = g.lookup_.at(g.elements_[a] * g.elements_[b]);
    g.inverse_.assign(order, 0);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            if (g.table_[a * order + b] == 0) {
                g.inverse_[a] = b;
                break;
            }
    return g;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const Matrix& m) const
{
    auto it = lookup_.find(m);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::size_t> FiniteMatrixGroup::generated(std::span<const std::size_t> gens) const
{
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> members{0};
    in[0] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (auto s : gens) {
            std::size_t p = multiply(members[i], s);
            if (!in[p]) {
                in[p] = true;
                members.push_back(p);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

Subgroup::Subgroup(const FiniteMatrixGroup& parent, std::vector<std::size_t> elements)
    : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty() || elements_.front() != 0)
        throw NotASubgroup("subgroup must contain the identity");
    if (elements_.back() >= parent.order())
        throw NotASubgroup("subgroup element index out of range");
    for (auto a : elements_)
        for (auto b : elements_)
            if (!contains(parent.multiply(a, b)))
                throw NotASubgroup("element set is not closed under multiplication");
}

Subgroup Subgroup::whole(const FiniteMatrixGroup& g)
{
    Subgroup h;
    h.elements_.resize(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        h.elements_[i] = i;
    return h;
}

Subgroup Subgroup::trivial()
{
    Subgroup h;
    h.elements_ = {0};
    return h;
}

bool Subgroup::contains(std::size_t element) const
{
    return std::binary_search(elements_.begin(), elements_.end(), element);
}

bool Subgroup::is_subset_of(const Subgroup& other) const
{
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

Subgroup conjugate(const FiniteMatrixGroup& g, const Subgroup& h, std::size_t x)
{
    std::vector<std::size_t> image;
    image.reserve(h.order());
    for (auto e : h.elements())
        image.push_back(g.conjugate(x, e));
    return Subgroup(g, std::move(image));
}

std::size_t SubgroupLattice::class_of(const Subgroup& h) const
{
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& members = classes[c].members;
        if (std::binary_search(members.begin(), members.end(), h))
            return c;
    }
    throw NotASubgroup("subgroup not found in the lattice");
}

std::size_t SubgroupLattice::subgroup_count() const
{
    std::size_t n = 0;
    for (const auto& c : classes)
        n += c.members.size();
    return n;
}

SubgroupLattice enumerate_subgroups(const FiniteMatrixGroup& g, std::size_t cap)
{
    if (g.order() > cap)
        throw CapExceeded("group of order " + std::to_string(g.order())
                          + " exceeds the subgroup enumeration cap");

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> cyclic;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::size_t gen[] = {x};
        auto c = g.generated(gen);
        if (seen.insert(c).second)
            cyclic.push_back(c);
    }

    // Every subgroup is reached from a cyclic one by adjoining cyclic
    // subgroups one at a time.
    std::vector<std::vector<std::size_t>> all(seen.begin(), seen.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (const auto& c : cyclic) {
            if (std::includes(all[i].begin(), all[i].end(), c.begin(), c.end()))
                continue;
            std::vector<std::size_t> gens = all[i];
            gens.insert(gens.end(), c.begin(), c.end());
            auto joined = g.generated(gens);
            if (seen.insert(joined).second)
                all.push_back(std::move(joined));
        }
    }

    std::set<std::vector<std::size_t>> assigned;
    SubgroupLattice lattice;
    for (const auto& s : seen) {
        if (assigned.count(s))
            continue;
        std::set<Subgroup> members;
        Subgroup h(g, s);
        for (std::size_t x = 0; x < g.order(); ++x)
            members.insert(conjugate(g, h, x));
        SubgroupClass cls;
        cls.members.assign(members.begin(), members.end());
        cls.representative = cls.members.front();
        for (const auto& m : cls.members)
            assigned.insert(m.elements());
        lattice.classes.push_back(std::move(cls));
    }
    std::sort(lattice.classes.begin(), lattice.classes.end(),
              [](const SubgroupClass& a, const SubgroupClass& b) {
                  if (a.representative.order() != b.representative.order())
                      return a.representative.order() > b.representative.order();
                  return a.representative < b.representative;
              });
    return lattice;
}

Subgroup normalizer(const FiniteMatrixGroup& g, const Subgroup& h)
{
    if (h.elements().back() >= g.order())
        throw NotASubgroup("subgroup does not belong to this group");
    std::vector<std::size_t> n;
    for (std::size_t x = 0; x < g.order(); ++x) {
        bool stable = true;
        for (auto e : h.elements())
            if (!h.contains(g.conjugate(x, e))) {
                stable = false;
                break;
            }
        if (stable)
            n.push_back(x);
    }
    return Subgroup(g, std::move(n));
}

bool is_normal(const FiniteMatrixGroup& g, const Subgroup& n, const Subgroup& h)
{
    if (!h.is_subset_of(n))
        return false;
    for (auto x : n.elements())
        for (auto e : h.elements())
            if (!h.contains(g.conjugate(x, e)))
                return false;
    return true;
}

std::optional<std::size_t> are_conjugate(const FiniteMatrixGroup& g, const Subgroup& h1,
                                         const Subgroup& h2)
{
    if (h1.order() != h2.order())
        return std::nullopt;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (conjugate(g, h1, x) == h2)
            return x;
    return std::nullopt;
}

bool subconjugate(const FiniteMatrixGroup& g, const Subgroup& h1, const Subgroup& h2)
{
    if (h2.order() % h1.order() != 0)
        return false;
    for (std::size_t x = 0; x < g.order(); ++x) {
        bool inside = true;
        for (auto e : h1.elements())
            if (!h2.contains(g.conjugate(x, e))) {
                inside = false;
                break;
            }
        if (inside)
            return true;
    }
    return false;
}

std::vector<std::size_t> left_coset_representatives(const FiniteMatrixGroup& g,
                                                    const Subgroup& in, const Subgroup& k)
{
    std::vector<bool> covered(g.order(), false);
    std::vector<std::size_t> reps;
    for (auto x : in.elements()) {
        if (covered[x])
            continue;
        reps.push_back(x);
        for (auto e : k.elements())
            covered[g.multiply(x, e)] = true;
    }
    return reps;
}

bool QuotientGroup::is_abelian() const
{
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = 0; b < order(); ++b)
            if (multiply(a, b) != multiply(b, a))
                return false;
    return true;
}

QuotientGroup quotient(const FiniteMatrixGroup& g, const Subgroup& n, const Subgroup& h)
{
    if (!is_normal(g, n, h))
        throw NotNormal("denominator is not a normal subgroup of the numerator");
    QuotientGroup q;
    q.numerator = n;
    q.denominator = h;
    q.representatives = left_coset_representatives(g, n, h);

    std::vector<std::size_t> coset_of(g.order(), 0);
    for (std::size_t c = 0; c < q.representatives.size(); ++c)
        for (auto e : h.elements())
            coset_of[g.multiply(q.representatives[c], e)] = c;

    const std::size_t order = q.representatives.size();
    q.table.assign(order * order, 0);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            q.table[a * order + b]
                = coset_of[g.multiply(q.representatives[a], q.representatives[b])];
    return q;
}

} // namespace isostrat
