#include "steiner/exact.hpp"

#include "steiner/error.hpp"

namespace steiner {

std::string to_decimal(const BigInt& value) {
    return value.get_str(10);
}

Ratio::Ratio(BigInt numerator, BigCount denominator) {
    if (sgn(denominator) == 0) {
        throw ParameterOutOfRange("ratio denominator must be nonzero");
    }
    value_ = mpq_class(std::move(numerator), std::move(denominator));
    value_.canonicalize();
}

bool Ratio::is_reduced() const {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
    return g == 1 && sgn(value_.get_den()) > 0;
}

std::string Ratio::str() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

}  // namespace steiner
