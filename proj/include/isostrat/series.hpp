#pragma once

#include "isostrat/scalar.hpp"

namespace isostrat {

/// Power series in one formal variable t, exact modulo t^(cutoff+1).
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned cutoff);
    TruncatedSeries(unsigned cutoff, const Vector& coefficients);

    unsigned cutoff() const { return cutoff_; }
    const Vector& coefficients() const { return coeffs_; }
    const Scalar& operator[](unsigned k) const { return coeffs_[k]; }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Scalar& s);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

private:
    unsigned cutoff_;
    Vector coeffs_;
};

} // namespace isostrat
