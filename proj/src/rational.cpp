#include "arithmon/rational.hpp"

#include "arithmon/numtheory.hpp"

#include <ostream>

namespace arithmon {

Rational::Rational(Natural numerator, Natural denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero())
        throw std::domain_error("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
    } else {
        Natural g = gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

std::string Rational::str() const {
    if (den_ == Natural(1)) return num_.str();
    return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace arithmon
