#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace steiner {

/// Arbitrary-precision natural number. Everything the library counts
/// (binomials, distance sums) is carried exactly; no floating point.
using BigCount = mpz_class;

/// Signed exact integer, for across-edge differences and formula guts.
using BigInt = mpz_class;

std::string to_decimal(const BigInt& value);

/// Exact rational, always kept in lowest terms with a positive denominator.
class Ratio {
public:
    Ratio() : value_(0) {}
    Ratio(BigInt numerator, BigCount denominator);
    explicit Ratio(long integer) : value_(integer) {}

    BigInt numerator() const { return BigInt(value_.get_num()); }
    BigCount denominator() const { return BigCount(value_.get_den()); }
    bool is_reduced() const;

    /// Rendered as "p/q" (denominator kept even when 1).
    std::string str() const;
    /// Lossy double view, for display only.
    double approx() const { return value_.get_d(); }

    const mpq_class& raw() const { return value_; }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

}  // namespace steiner
