#pragma once

#include "arithmon/natural.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace arithmon {

/// Non-negative rational, kept in lowest terms with a positive
/// denominator. Covers norms and distances, which never go negative.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Natural numerator, Natural denominator);
    Rational(int numerator) : Rational(Natural(numerator), Natural(1)) {}

    const Natural& num() const { return num_; }
    const Natural& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// "0", "1", "3/4" — no denominator printed when it is 1.
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    Natural num_;
    Natural den_;
};

}  // namespace arithmon
