#include "helpers.hpp"

#include "isostrat/errors.hpp"
#include "isostrat/representation.hpp"

#include <doctest.h>

using namespace isostrat;
using namespace isostrat::testing;

namespace {

Representation s3_rep() { return permutation_rep({{2, 1, 3}, {2, 3, 1}}, 3); }

Representation h2() { return harmonic_rep(2, octahedral_generators(), true); }
Representation h4() { return harmonic_rep(4, octahedral_generators(), false); }

/// Quadric x^T A x of a symmetric 3x3 matrix.
Poly quadric(const Matrix& a)
{
    Poly q(HarmonicSpace::space_variables());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Exponent e(3, 0);
            ++e[i];
            ++e[j];
            q.add_term(e, a(i, j));
        }
    return q;
}

Vector quadric_coords(const Matrix& a) { return HarmonicSpace(2).coordinates(quadric(a)); }

Subgroup d2_in(const FiniteMatrixGroup& g)
{
    std::vector<std::size_t> gens;
    for (const auto& m : klein_generators())
        gens.push_back(*g.index_of(m));
    return Subgroup(g, g.generated(gens));
}

} // namespace

TEST_CASE("harmonic space")
{
    CHECK(HarmonicSpace(0).dimension() == 1);
    CHECK(HarmonicSpace(2).dimension() == 5);
    CHECK(HarmonicSpace(4).dimension() == 9);
    for (unsigned d = 0; d <= 5; ++d) {
        HarmonicSpace space(d);
        CHECK(space.dimension() == 2 * d + 1);
        for (const auto& b : space.basis()) {
            CHECK(laplacian(b).is_zero());
            CHECK(static_cast<unsigned>(b.degree()) == d);
        }
    }
    HarmonicSpace space(2);
    CHECK_THROWS_AS(space.coordinates(xyz("x^2")), ValidationError);
    CHECK_THROWS_AS(space.coordinates(xyz("x*y*z")), ValidationError);
    Poly q = xyz("x^2 + y^2 - 2*z^2");
    CHECK(space.polynomial(space.coordinates(q)) == q);
}

TEST_CASE("harmonic action agrees with evaluation at the rotated point")
{
    RandomRationals rnd(11);
    auto g = FiniteMatrixGroup::close(octahedral_generators());
    for (unsigned d : {2U, 3U, 4U}) {
        HarmonicSpace space(d);
        for (std::size_t i = 0; i < g.order(); ++i) {
            Matrix rho = space.action(g.element(i));
            Matrix ginv = g.element(i).transpose();
            for (std::size_t k = 0; k < space.dimension(); ++k) {
                Poly moved = space.polynomial(rho * space.coordinates(space.basis()[k]));
                Vector x = rnd.vector(3);
                CHECK(moved.evaluate(x) == space.basis()[k].evaluate(ginv * x));
            }
        }
    }
}

TEST_CASE("representation construction")
{
    SUBCASE("d=0 is trivial")
    {
        auto rep = harmonic_rep(0, octahedral_generators(), false);
        CHECK(rep.dimension() == 1);
        for (std::size_t i = 0; i < rep.group().order(); ++i)
            CHECK(rep.action(i) == Matrix::identity(1));
    }
    SUBCASE("dimensions")
    {
        CHECK(h2().dimension() == 5);
        CHECK(h4().dimension() == 9);
        CHECK(h4().group().order() == 24);
        CHECK(s3_rep().group().order() == 6);
        CHECK(h2().variables() == numbered_names("h", 5));
    }
    SUBCASE("vector field derivations satisfy the reversed bracket relations")
    {
        auto rep = h2();
        const auto& lie = rep.lie();
        REQUIRE(lie.size() == 3);
        CHECK(commutator(lie[0].matrix, lie[1].matrix) == lie[2].matrix * Scalar(-1));
        CHECK(commutator(lie[1].matrix, lie[2].matrix) == lie[0].matrix * Scalar(-1));
        CHECK(commutator(lie[2].matrix, lie[0].matrix) == lie[1].matrix * Scalar(-1));
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(harmonic_rep(2, {mat({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})}, false),
                        ValidationError);
        CHECK_THROWS_AS(permutation_rep({{1, 1, 3}}, 3), ValidationError);
        CHECK_THROWS_AS(permutation_rep({{1, 2}}, 3), ValidationError);
        CHECK_THROWS_AS(matrix_rep({mat({{1, 0}, {0, -1}})}, {}, mat({{1, 0}, {0, -1}})),
                        ValidationError);
        CHECK_THROWS_AS(matrix_rep({mat({{0, -1}, {1, 0}})}, {}, mat({{2, 0}, {0, 1}})),
                        ValidationError);
    }
    SUBCASE("non-orthogonal finite group gets an averaged inner product")
    {
        auto rep = matrix_rep({mat({{0, -1}, {1, -1}})});
        CHECK(rep.group().order() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(rep.action(i).transpose() * rep.inner_product() * rep.action(i)
                  == rep.inner_product());
    }
}

TEST_CASE("stabilizer")
{
    auto s3 = s3_rep();
    CHECK(stabilizer(s3, vec({1, 2, 3})).order() == 1);
    Subgroup c2 = stabilizer(s3, vec({1, 1, 2}));
    CHECK(c2.order() == 2);
    CHECK(s3.action(c2.elements()[1]) == mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(stabilizer(s3, vec({0, 0, 0})).order() == 6);
    CHECK_THROWS_AS(stabilizer(s3, vec({1, 2})), DimensionMismatch);

    // Brute force on quadrics: g A g^T = A.
    auto rep = h2();
    Matrix a = Matrix::diagonal(vec({-1, -1, 2}));
    std::size_t oracle = 0;
    for (const auto& g : rep.group().elements())
        if (g * a * g.transpose() == a)
            ++oracle;
    CHECK(oracle == 8);
    Subgroup st = stabilizer(rep, quadric_coords(a));
    CHECK(st.order() == 8);
    for (auto e : st.elements())
        CHECK(rep.group().element(e)(2, 2) * rep.group().element(e)(2, 2) == 1);
}

TEST_CASE("fixed loci")
{
    SUBCASE("O(2) on H^2 is the line of diag(-1,-1,2)")
    {
        auto rep = h2();
        ClosedSubgroupSpec o2{"O(2)", {HarmonicSpace(2).action(mat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}))},
                              {rep.lie_generator("Lz").matrix}};
        auto fixed = fixed_locus(rep, o2);
        CHECK(fixed.dimension() == 1);
        CHECK(fixed == LinearSubspace(5, {quadric_coords(Matrix::diagonal(vec({-1, -1, 2})))}));
    }
    SUBCASE("D2 on H^4 is spanned by p1, p2, p3")
    {
        auto rep = h4();
        HarmonicSpace space(4);
        std::vector<Vector> p{space.coordinates(xyz("-z^4 + 6*y^2*z^2 - y^4")),
                              space.coordinates(xyz("-z^4 + 6*x^2*z^2 - x^4")),
                              space.coordinates(xyz("-y^4 + 6*x^2*y^2 - x^4"))};
        auto fixed = fixed_locus(rep, d2_in(rep.group()));
        CHECK(fixed.dimension() == 3);
        CHECK(fixed == LinearSubspace(9, p));
        CHECK(character_dimension(rep, d2_in(rep.group())) == 3);
    }
    SUBCASE("trivial subgroup fixes everything")
    {
        auto rep = h4();
        CHECK(fixed_locus(rep, Subgroup::trivial()).dimension() == 9);
        CHECK(fixed_locus(rep, ClosedSubgroupSpec{"1", {}, {}}).dimension() == 9);
    }
    SUBCASE("SO(3) fixes nothing in positive degree")
    {
        auto rep = h2();
        std::vector<Matrix> lie;
        for (const auto& l : rep.lie())
            lie.push_back(l.matrix);
        CHECK(fixed_locus(rep, ClosedSubgroupSpec{"SO(3)", {}, lie}).dimension() == 0);
    }
}

TEST_CASE("character formula, normalizer stability and reverse inclusion")
{
    std::vector<Representation> reps{s3_rep(), h2(), h4(),
                                     harmonic_rep(3, octahedral_generators(), false)};
    for (const auto& rep : reps) {
        auto lattice = enumerate_subgroups(rep.group());
        std::vector<Subgroup> all;
        for (const auto& cls : lattice.classes)
            all.insert(all.end(), cls.members.begin(), cls.members.end());
        for (const auto& h : all) {
            auto fixed = fixed_locus(rep, h);
            CHECK(Scalar(static_cast<unsigned long>(fixed.dimension()))
                  == character_dimension(rep, h));
            Subgroup norm = normalizer(rep.group(), h);
            for (auto n : norm.elements())
                for (const auto& b : fixed.basis())
                    CHECK(fixed.contains(rep.action(n) * b));
            for (const auto& k : all)
                if (h.is_subset_of(k))
                    CHECK(fixed.contains(fixed_locus(rep, k)));
        }
    }
}

TEST_CASE("stabilizers are equivariant")
{
    RandomRationals rnd(5);
    for (const auto& rep : {s3_rep(), h2(), h4()}) {
        const auto& g = rep.group();
        for (const auto& cls : enumerate_subgroups(g).classes) {
            auto fixed = fixed_locus(rep, cls.representative);
            Vector v(rep.dimension(), 0);
            for (const auto& b : fixed.basis()) {
                Scalar c = rnd.next();
                for (std::size_t i = 0; i < v.size(); ++i)
                    v[i] += c * b[i];
            }
            Subgroup st = stabilizer(rep, v);
            CHECK(cls.representative.is_subset_of(st));
            for (std::size_t x = 0; x < g.order(); ++x)
                CHECK(stabilizer(rep, rep.action(x) * v) == conjugate(g, st, x));
        }
    }
}

TEST_CASE("Lie stabilizer algebra")
{
    auto rep = h2();
    // Oracle: X stabilizes the quadric of A iff [X, A] = 0.
    auto oracle_dim = [&](const Matrix& a) {
        std::vector<Vector> columns;
        for (const auto& l : so3_generators())
            columns.push_back(commutator(l.matrix, a).entries());
        return 3 - span_dimension(columns, 9);
    };
    Matrix axial = Matrix::diagonal(vec({-1, -1, 2}));
    auto st = lie_stabilizer_algebra(rep, quadric_coords(axial));
    CHECK(st.dimension() == 1);
    CHECK(oracle_dim(axial) == 1);
    CHECK(st == LinearSubspace(3, {vec({0, 0, 1})}));

    Matrix generic = Matrix::diagonal(vec({1, 2, -3}));
    CHECK(lie_stabilizer_algebra(rep, quadric_coords(generic)).dimension() == 0);
    CHECK(oracle_dim(generic) == 0);

    CHECK(lie_stabilizer_algebra(rep, Vector(5, 0)).dimension() == 3);

    RandomRationals rnd(3);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix b = rnd.matrix(3, 3);
        Matrix a = b + b.transpose();
        Scalar t = a.trace() / 3;
        for (std::size_t i = 0; i < 3; ++i)
            a(i, i) -= t;
        CHECK(lie_stabilizer_algebra(rep, quadric_coords(a)).dimension() == oracle_dim(a));
    }

    CHECK_THROWS_AS(lie_stabilizer_algebra(s3_rep(), vec({1, 2, 3})), NoLieAction);
}

TEST_CASE("orthogonal slice")
{
    auto rep = h2();
    Vector v = quadric_coords(Matrix::diagonal(vec({-1, -1, 2})));
    auto s = orthogonal_slice(rep, v);
    CHECK(s.tangent.dimension() == 2);
    CHECK(s.slice.dimension() == 3);
    CHECK(s.slice.contains(v));

    // Oracle: tangent vectors are the quadrics of [X, A].
    std::vector<Vector> oracle;
    for (const auto& l : so3_generators())
        oracle.push_back(quadric_coords(commutator(l.matrix, Matrix::diagonal(vec({-1, -1, 2})))));
    CHECK(s.tangent == LinearSubspace(5, oracle));

    RandomRationals rnd(8);
    for (int trial = 0; trial < 5; ++trial) {
        Vector w = rnd.vector(5);
        auto sw = orthogonal_slice(rep, w);
        CHECK(sw.tangent.dimension() + sw.slice.dimension() == 5);
        std::vector<Vector> both = sw.tangent.basis();
        both.insert(both.end(), sw.slice.basis().begin(), sw.slice.basis().end());
        CHECK(span_dimension(both, 5) == 5);
        CHECK(sw.slice.contains(w));
    }

    CHECK(orthogonal_slice(rep, Vector(5, 0)).slice.dimension() == 5);
    auto s3 = s3_rep();
    auto fin = orthogonal_slice(s3, vec({1, 2, 3}));
    CHECK(fin.tangent.dimension() == 0);
    CHECK(fin.slice.dimension() == 3);
}

TEST_CASE("apolar form is invariant and proportional to the trace form on quadrics")
{
    HarmonicSpace space(2);
    Matrix gram = space.apolar_gram();
    RandomRationals rnd(21);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix b = rnd.matrix(3, 3);
        Matrix a = b + b.transpose();
        Scalar t = a.trace() / 3;
        for (std::size_t i = 0; i < 3; ++i)
            a(i, i) -= t;
        Vector c = quadric_coords(a);
        CHECK(dot(c, gram * c) == 2 * (a * a).trace());
    }
}
