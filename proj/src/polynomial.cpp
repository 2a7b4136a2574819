#include "isostrat/polynomial.hpp"

#include "isostrat/errors.hpp"

#include <algorithm>
#include <cctype>

namespace isostrat {

unsigned total_degree(const Exponent& e)
{
    unsigned d = 0;
    for (auto k : e)
        d += k;
    return d;
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const
{
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Poly Poly::constant(std::vector<std::string> variables, const Scalar& c)
{
    Poly p(std::move(variables));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> variables, std::size_t index)
{
    Exponent e(variables.size(), 0);
    if (index >= e.size())
        throw DimensionMismatch("variable index out of range");
    e[index] = 1;
    return monomial(std::move(variables), std::move(e));
}

Poly Poly::monomial(std::vector<std::string> variables, Exponent e, const Scalar& c)
{
    if (e.size() != variables.size())
        throw DimensionMismatch("exponent length differs from variable count");
    Poly p(std::move(variables));
    p.add_term(e, c);
    return p;
}

Poly Poly::linear(std::vector<std::string> variables, const Vector& coeffs)
{
    if (coeffs.size() != variables.size())
        throw DimensionMismatch("linear form length differs from variable count");
    Poly p(std::move(variables));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int Poly::degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Poly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    unsigned d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

Scalar Poly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Poly::leading_coefficient() const
{
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

void Poly::add_term(const Exponent& e, const Scalar& c)
{
    if (sgn(c) == 0)
        return;
    if (e.size() != vars_.size())
        throw DimensionMismatch("exponent length differs from variable count");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& other) const
{
    if (vars_ != other.vars_)
        throw DimensionMismatch("polynomials over different variable lists");
}

Poly& Poly::operator+=(const Poly& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs)
{
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Scalar& s)
{
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

Poly operator*(const Poly& a, const Poly& b)
{
    a.check_compatible(b);
    Poly out(a.vars_);
    Exponent e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

bool operator==(const Poly& a, const Poly& b)
{
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

Poly Poly::pow(unsigned k) const
{
    Poly result = constant(vars_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Scalar Poly::evaluate(const Vector& point) const
{
    if (point.size() != vars_.size())
        throw DimensionMismatch("evaluation point of length " + std::to_string(point.size())
                                + " for a polynomial in " + std::to_string(vars_.size())
                                + " variables");
    Scalar acc = 0;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                t *= point[i];
        acc += t;
    }
    return acc;
}

Poly Poly::derivative(std::size_t var) const
{
    if (var >= vars_.size())
        throw DimensionMismatch("derivative with respect to a missing variable");
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponent f = e;
        f[var] -= 1;
        out.add_term(f, c * static_cast<unsigned long>(e[var]));
    }
    return out;
}

Poly Poly::renamed(std::vector<std::string> variables) const
{
    if (variables.size() != vars_.size())
        throw DimensionMismatch("renaming to a variable list of different length");
    Poly out = *this;
    out.vars_ = std::move(variables);
    return out;
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool negative = sgn(c) < 0;
        Scalar magnitude = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += p.variables()[i];
            if (e[i] > 1)
                factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty())
            out += to_string(magnitude);
        else if (magnitude == 1)
            out += factors;
        else
            out += to_string(magnitude) + "*" + factors;
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars)
    {
    }

    Poly parse()
    {
        Poly result(vars_);
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end())
                break;
            Scalar sign = 1;
            char c = peek();
            if (c == '+' || c == '-') {
                sign = c == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            skip_ws();
            result += parse_term() * sign;
        }
        return result;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset "
                         + std::to_string(pos_));
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly parse_term()
    {
        Poly term = Poly::constant(vars_, 1);
        bool need_factor = true;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string literal = num;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::string den = digits();
                if (den.empty())
                    fail("expected denominator");
                literal += "/" + den;
            }
            term *= parse_scalar(literal);
            skip_ws();
            if (at_end() || peek() != '*')
                return term;
            ++pos_;
            skip_ws();
        }
        while (need_factor) {
            term = term * parse_factor();
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
            } else {
                need_factor = false;
            }
        }
        return term;
    }

    Poly parse_factor()
    {
        if (at_end())
            fail("expected a variable");
        std::size_t start = pos_;
        char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
            fail("expected a variable");
        while (!at_end()
               && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            fail("unknown variable '" + name + "'");
        unsigned power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::string k = digits();
            if (k.empty() || std::stoul(k) == 0)
                fail("exponent must be a positive integer");
            power = static_cast<unsigned>(std::stoul(k));
        }
        Exponent e(vars_.size(), 0);
        e[static_cast<std::size_t>(it - vars_.begin())] = power;
        return Poly::monomial(vars_, e);
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

void exponents_rec(std::size_t i, unsigned remaining, Exponent& cur, std::vector<Exponent>& out)
{
    if (i + 1 == cur.size()) {
        cur[i] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        cur[i] = k;
        exponents_rec(i + 1, remaining - k, cur, out);
    }
}

} // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& variables)
{
    return PolyParser(text, variables).parse();
}

std::vector<Exponent> monomial_exponents(std::size_t n, unsigned d)
{
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back();
        return out;
    }
    Exponent cur(n, 0);
    exponents_rec(0, d, cur, out);
    return out;
}

std::vector<Poly> monomial_basis(const std::vector<std::string>& variables, unsigned d)
{
    std::vector<Poly> out;
    for (auto& e : monomial_exponents(variables.size(), d))
        out.push_back(Poly::monomial(variables, std::move(e)));
    return out;
}

Vector coefficients_on(const Poly& p, const std::vector<Exponent>& monomials)
{
    Vector v(monomials.size(), Scalar(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        auto it = p.terms().find(monomials[i]);
        if (it != p.terms().end()) {
            v[i] = it->second;
            ++found;
        }
    }
    if (found != p.term_count())
        throw DimensionMismatch("polynomial has terms outside the monomial list");
    return v;
}

Poly from_coefficients(const std::vector<std::string>& variables,
                       const std::vector<Exponent>& monomials, const Vector& coeffs)
{
    if (coeffs.size() != monomials.size())
        throw DimensionMismatch("coefficient vector length differs from monomial count");
    Poly p(variables);
    for (std::size_t i = 0; i < monomials.size(); ++i)
        p.add_term(monomials[i], coeffs[i]);
    return p;
}

Poly substitute(const Poly& p, const Matrix& m, const std::vector<std::string>& new_variables)
{
    if (m.rows() != p.variable_count() || m.cols() != new_variables.size())
        throw DimensionMismatch("substitution matrix is " + std::to_string(m.rows()) + "x"
                                + std::to_string(m.cols()) + ", expected "
                                + std::to_string(p.variable_count()) + "x"
                                + std::to_string(new_variables.size()));
    const std::size_t n = p.variable_count();
    std::vector<unsigned> max_power(n, 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < n; ++i)
            max_power[i] = std::max(max_power[i], e[i]);

    // powers[i][k] = (row i of m as a linear form)^k
    std::vector<std::vector<Poly>> powers(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly form = Poly::linear(new_variables, m.row_vector(i));
        powers[i].push_back(Poly::constant(new_variables, 1));
        for (unsigned k = 1; k <= max_power[i]; ++k)
            powers[i].push_back(powers[i].back() * form);
    }

    Poly out(new_variables);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(new_variables, c);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] > 0)
                t = t * powers[i][e[i]];
        out += t;
    }
    return out;
}

Poly act(const Matrix& g_inverse, const Poly& p)
{
    if (!g_inverse.is_square())
        throw DimensionMismatch("action matrix must be square");
    return substitute(p, g_inverse, p.variables());
}

Poly laplacian(const Poly& p)
{
    Poly out(p.variables());
    for (std::size_t i = 0; i < p.variable_count(); ++i)
        out += p.derivative(i).derivative(i);
    return out;
}

Poly apply_vector_field(const Matrix& a, const Poly& p)
{
    const std::size_t n = p.variable_count();
    if (a.rows() != n || a.cols() != n)
        throw DimensionMismatch("vector field matrix does not match variable count");
    Poly out(p.variables());
    for (std::size_t i = 0; i < n; ++i) {
        Poly di = p.derivative(i);
        if (di.is_zero())
            continue;
        out += Poly::linear(p.variables(), a.row_vector(i)) * di;
    }
    return out;
}

Poly restrict_to_subspace(const Poly& p, const std::vector<Vector>& basis,
                          const std::vector<std::string>& new_variables)
{
    if (basis.size() != new_variables.size())
        throw DimensionMismatch("one restriction coordinate per basis vector is required");
    for (const auto& b : basis)
        if (b.size() != p.variable_count())
            throw DimensionMismatch("basis vector of length " + std::to_string(b.size())
                                    + " for a polynomial in "
                                    + std::to_string(p.variable_count()) + " variables");
    Matrix m(p.variable_count(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < p.variable_count(); ++i)
            m(i, j) = basis[j][i];
    return substitute(p, m, new_variables);
}

std::vector<std::string> numbered_names(const std::string& prefix, std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

Poly compose(const Poly& p, const std::vector<Poly>& images)
{
    if (images.size() != p.variable_count())
        throw DimensionMismatch("compose needs one image per variable");
    if (images.empty())
        throw DimensionMismatch("compose needs at least one image to fix the target ring");
    const auto& target = images.front().variables();
    for (const auto& q : images)
        if (q.variables() != target)
            throw DimensionMismatch("compose images over different variable lists");

    const std::size_t n = images.size();
    std::vector<std::vector<Poly>> powers(n);
    for (std::size_t i = 0; i < n; ++i)
        powers[i].push_back(Poly::constant(target, 1));

    Poly out(target);
    for (const auto& [e, c] : p.terms()) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            while (powers[i].size() <= e[i])
                powers[i].push_back(powers[i].back() * images[i]);
            if (e[i] > 0)
                t = t * powers[i][e[i]];
        }
        out += t;
    }
    return out;
}

} // namespace isostrat
