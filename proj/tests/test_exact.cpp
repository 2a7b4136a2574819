#include "helpers.hpp"

#include "isostrat/errors.hpp"
#include "isostrat/linalg.hpp"

#include <doctest.h>

using namespace isostrat;
using namespace isostrat::testing;

TEST_CASE("scalar parsing and printing")
{
    CHECK(to_string(parse_scalar("6/4")) == "3/2");
    CHECK(to_string(parse_scalar("-10/5")) == "-2");
    CHECK(to_string(parse_scalar(" 7 ")) == "7");
    CHECK(to_string(parse_scalar("0/9")) == "0");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("0.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar("sqrt(5)"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("kernel_basis")
{
    SUBCASE("full rank identity has an empty kernel")
    {
        CHECK(kernel_basis(Matrix::identity(3)).empty());
    }
    SUBCASE("zero matrix gives the standard basis")
    {
        auto k = kernel_basis(Matrix(2, 3));
        REQUIRE(k.size() == 3);
        CHECK(k[0] == vec({1, 0, 0}));
        CHECK(k[1] == vec({0, 1, 0}));
        CHECK(k[2] == vec({0, 0, 1}));
    }
    SUBCASE("x + y + z = 0")
    {
        auto k = kernel_basis(mat({{1, 1, 1}}));
        REQUIRE(k.size() == 2);
        CHECK(k[0] == vec({-1, 1, 0}));
        CHECK(k[1] == vec({-1, 0, 1}));
    }
}

TEST_CASE("rref")
{
    auto r = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r.matrix == mat({{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});

    auto id = rref(Matrix::identity(4));
    CHECK(id.matrix == Matrix::identity(4));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2, 3});

    auto swap = rref(mat({{0, 1}, {1, 0}}));
    CHECK(swap.matrix == Matrix::identity(2));
    CHECK(swap.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("subspace_equal")
{
    CHECK(subspace_equal({vec({1, 0})}, {vec({2, 0})}));
    CHECK_FALSE(subspace_equal({vec({1, 0})}, {vec({0, 1})}));
    CHECK(subspace_equal({vec({1, 1}), vec({1, -1})}, {vec({1, 0}), vec({0, 1})}));
    CHECK_THROWS_AS(subspace_equal({vec({1, 0})}, {vec({1, 0, 0})}), DimensionMismatch);
}

TEST_CASE("linear algebra properties on random matrices")
{
    RandomRationals rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.index(5);
        std::size_t cols = 1 + rng.index(6);
        Matrix m = rng.matrix(rows, cols);
        // Force rank deficiency now and then.
        if (trial % 3 == 0 && rows > 1)
            for (std::size_t c = 0; c < cols; ++c)
                m(rows - 1, c) = m(0, c) * 2;

        auto kernel = kernel_basis(m);
        for (const auto& v : kernel)
            CHECK(is_zero(m * v));
        CHECK(rank(m) + kernel.size() == cols);
        if (!kernel.empty())
            CHECK(span_dimension(kernel, cols) == kernel.size());

        auto once = rref(m).matrix;
        CHECK(rref(once).matrix == once);
    }
}

TEST_CASE("scalar arithmetic round-trips")
{
    RandomRationals rng(5);
    for (int i = 0; i < 100; ++i) {
        Scalar a = rng.next(50);
        if (is_zero(a))
            continue;
        CHECK(a * (1 / a) == 1);
        CHECK(parse_scalar(to_string(a)) == a);
    }
}

TEST_CASE("inverse, determinant and characteristic polynomial")
{
    Matrix m = mat({{2, 1, 0}, {0, 1, 3}, {1, 0, 1}});
    CHECK(m * inverse(m) == Matrix::identity(3));
    CHECK(determinant(m) == 5);
    CHECK_THROWS_AS(inverse(mat({{1, 2}, {2, 4}})), NonInvertibleGenerator);

    // det(tI - m) evaluated at t = 2 matches det(2I - m) computed directly.
    Vector c = characteristic_polynomial(m);
    Scalar at2 = 0;
    for (std::size_t k = c.size(); k-- > 0;)
        at2 = at2 * 2 + c[k];
    CHECK(at2 == determinant(Matrix::identity(3) * Scalar(2) - m));
    CHECK(c[3] == 1);
    CHECK(c[2] == -m.trace());
}

TEST_CASE("LinearSubspace canonical form and annihilator")
{
    LinearSubspace a(3, {vec({1, 1, 0}), vec({0, 0, 1})});
    LinearSubspace b(3, {vec({2, 2, 5}), vec({1, 1, -1})});
    CHECK(a == b);
    CHECK(a.dimension() == 2);
    auto ann = a.annihilator();
    REQUIRE(ann.size() == 1);
    for (const auto& v : a.basis())
        CHECK(is_zero(dot(ann[0], v)));
    CHECK(a.contains(vec({3, 3, 7})));
    CHECK_FALSE(a.contains(vec({1, 2, 3})));
    auto c = coordinates_in({vec({1, 1, 0}), vec({0, 0, 1})}, vec({3, 3, 7}));
    REQUIRE(c);
    CHECK(*c == vec({3, 7}));
    CHECK_FALSE(coordinates_in({vec({1, 1, 0})}, vec({1, 0, 0})));
}
