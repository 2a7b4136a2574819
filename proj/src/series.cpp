#include "isostrat/series.hpp"

#include "isostrat/errors.hpp"

namespace isostrat {

TruncatedSeries::TruncatedSeries(unsigned cutoff) : cutoff_(cutoff), coeffs_(cutoff + 1, Scalar(0)) {}

TruncatedSeries::TruncatedSeries(unsigned cutoff, const Vector& coefficients)
    : TruncatedSeries(cutoff)
{
    for (std::size_t k = 0; k < coefficients.size() && k <= cutoff; ++k)
        coeffs_[k] = coefficients[k];
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    if (rhs.cutoff_ != cutoff_)
        throw DimensionMismatch("series with different cutoffs");
    for (unsigned k = 0; k <= cutoff_; ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Scalar& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.cutoff_ != b.cutoff_)
        throw DimensionMismatch("series with different cutoffs");
    TruncatedSeries out(a.cutoff_);
    for (unsigned i = 0; i <= a.cutoff_; ++i) {
        if (sgn(a.coeffs_[i]) == 0)
            continue;
        for (unsigned j = 0; i + j <= a.cutoff_; ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    if (sgn(coeffs_[0]) == 0)
        throw Error("series with zero constant term is not invertible");
    TruncatedSeries inv(cutoff_);
    Scalar c0inv = 1 / coeffs_[0];
    inv.coeffs_[0] = c0inv;
    for (unsigned k = 1; k <= cutoff_; ++k) {
        Scalar acc = 0;
        for (unsigned i = 1; i <= k; ++i)
            if (sgn(coeffs_[i]) != 0)
                acc += coeffs_[i] * inv.coeffs_[k - i];
        inv.coeffs_[k] = -acc * c0inv;
    }
    return inv;
}

} // namespace isostrat
