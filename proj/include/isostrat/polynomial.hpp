#pragma once

#include "isostrat/matrix.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isostrat {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order, first variable greatest. Sorting a term map
/// with this comparator lists the leading term first.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial over Q on an ordered list of named variables.
/// Zero coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Exponent, Scalar, GrlexGreater>;

    Poly() = default;
    explicit Poly(std::vector<std::string> variables);

    static Poly constant(std::vector<std::string> variables, const Scalar& c);
    static Poly variable(std::vector<std::string> variables, std::size_t index);
    static Poly monomial(std::vector<std::string> variables, Exponent e, const Scalar& c = 1);
    /// Linear form sum_i coeffs[i] * var_i.
    static Poly linear(std::vector<std::string> variables, const Vector& coeffs);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t variable_count() const { return vars_.size(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Scalar coefficient(const Exponent& e) const;
    /// Leading coefficient in grlex order; zero for the zero polynomial.
    Scalar leading_coefficient() const;

    void add_term(const Exponent& e, const Scalar& c);

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Scalar& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    Poly pow(unsigned k) const;
    Scalar evaluate(const Vector& point) const;
    Poly derivative(std::size_t var) const;
    /// Same polynomial viewed over another variable list of the same length.
    Poly renamed(std::vector<std::string> variables) const;

private:
    void check_compatible(const Poly& other) const;

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Canonical text form, terms in grlex order, e.g. "-1/14*J2 + 4/7*s1^2".
std::string to_string(const Poly& p);

/// Parses the textual grammar: signed sum of terms, each an optional
/// rational coefficient followed by "*"-separated factors var or var^k.
Poly parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// All monomials of total degree exactly d, in grlex order.
std::vector<Exponent> monomial_exponents(std::size_t n, unsigned d);
std::vector<Poly> monomial_basis(const std::vector<std::string>& variables, unsigned d);

/// Coefficients of p on the given monomial list; throws if p has a term
/// outside it.
Vector coefficients_on(const Poly& p, const std::vector<Exponent>& monomials);
Poly from_coefficients(const std::vector<std::string>& variables,
                       const std::vector<Exponent>& monomials, const Vector& coeffs);

/// q(s) = p(M s): M has one row per variable of p and one column per new
/// variable.
Poly substitute(const Poly& p, const Matrix& m, const std::vector<std::string>& new_variables);

/// p composed with v -> M v. Pass the inverse of rho(g) to get g . p.
Poly act(const Matrix& g_inverse, const Poly& p);

Poly laplacian(const Poly& p);

/// Derivative of p along the linear vector field v -> A v:
/// sum_i (A v)_i dp/dv_i.
Poly apply_vector_field(const Matrix& a, const Poly& p);

/// p(s_1 b_1 + ... + s_m b_m) in fresh variables s1..sm.
Poly restrict_to_subspace(const Poly& p, const std::vector<Vector>& basis,
                          const std::vector<std::string>& new_variables);

/// Names prefix1..prefixN.
std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n);

/// Substitutes polynomial images for every variable of p. All images must
/// share one variable list.
Poly compose(const Poly& p, const std::vector<Poly>& images);

} // namespace isostrat
