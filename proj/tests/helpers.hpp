#pragma once

#include "isostrat/matrix.hpp"
#include "isostrat/polynomial.hpp"

#include <random>
#include <vector>

namespace isostrat::testing {

inline Matrix mat(std::vector<Vector> rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    return Matrix::from_rows(rows, cols);
}

inline Vector vec(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

/// Quarter turn about z and the cyclic coordinate shift: generate the 24
/// rotations of the cube.
inline std::vector<Matrix> octahedral_generators()
{
    return {mat({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}), mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})};
}

inline std::vector<Matrix> klein_generators()
{
    return {mat({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}), mat({{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}})};
}

inline Poly xyz(const char* text) { return parse_poly(text, {"x", "y", "z"}); }

/// Small random rationals for property tests; fixed seed per call site.
class RandomRationals {
public:
    explicit RandomRationals(unsigned seed) : rng_(seed) {}

    Scalar next(long range = 5)
    {
        std::uniform_int_distribution<long> num(-range, range);
        std::uniform_int_distribution<long> den(1, 3);
        Scalar s(num(rng_), den(rng_));
        s.canonicalize();
        return s;
    }

    Vector vector(std::size_t n, long range = 5)
    {
        Vector v;
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(next(range));
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols, long range = 3)
    {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = next(range);
        return m;
    }

    Poly poly(const std::vector<std::string>& vars, unsigned max_degree, std::size_t terms)
    {
        Poly p(vars);
        std::uniform_int_distribution<unsigned> exp(0, max_degree);
        for (std::size_t t = 0; t < terms; ++t) {
            Exponent e(vars.size(), 0);
            unsigned budget = max_degree;
            for (auto& k : e) {
                k = std::min(budget, exp(rng_) / 2);
                budget -= k;
            }
            p.add_term(e, next());
        }
        return p;
    }

    std::size_t index(std::size_t n)
    {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }

private:
    std::mt19937 rng_;
};

} // namespace isostrat::testing
