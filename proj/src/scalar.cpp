#include "isostrat/scalar.hpp"

#include "isostrat/errors.hpp"

#include <cctype>

namespace isostrat {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Scalar parse_scalar(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!den.empty() && (den.front() == '-' || den.front() == '+'))
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    mpz_class numerator(n, 10);
    mpz_class denominator(std::string(den), 10);
    if (denominator == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    Scalar value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

Scalar dot(const Vector& a, const Vector& b)
{
    Scalar acc = 0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (!is_zero(a[i]) && !is_zero(b[i]))
            acc += a[i] * b[i];
    return acc;
}

bool lex_less(const Vector& a, const Vector& b)
{
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0;
    }
    return a.size() < b.size();
}

} // namespace isostrat
