#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arithmon {

/// Signed unbounded integer. Public APIs are natural-number valued; the
/// signed type appears only in extended_gcd cofactors and CRT internals.
using Integer = boost::multiprecision::cpp_int;

/// Unbounded natural number. Arithmetic never wraps or goes negative
/// silently: subtraction below zero and division by zero throw
/// std::domain_error.
class Natural {
public:
    Natural() = default;
    Natural(int v) : value_(check_sign(Integer(v))) {}
    Natural(long v) : value_(check_sign(Integer(v))) {}
    Natural(long long v) : value_(check_sign(Integer(v))) {}
    Natural(unsigned v) : value_(v) {}
    Natural(unsigned long v) : value_(v) {}
    Natural(unsigned long long v) : value_(v) {}
    explicit Natural(Integer v) : value_(check_sign(std::move(v))) {}

    /// Parses a decimal string of any length.
    static Natural parse(std::string_view text);

    const Integer& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    /// Checked narrowing, for exponents and window sizes.
    std::uint64_t to_u64() const;

    std::string str() const { return value_.str(); }

    friend Natural operator+(const Natural& a, const Natural& b) {
        return Natural(unchecked{}, a.value_ + b.value_);
    }
    friend Natural operator*(const Natural& a, const Natural& b) {
        return Natural(unchecked{}, a.value_ * b.value_);
    }
    /// Checked subtraction; throws std::domain_error if b > a.
    friend Natural operator-(const Natural& a, const Natural& b);
    /// Floor division; throws std::domain_error on zero divisor.
    friend Natural operator/(const Natural& a, const Natural& b);
    friend Natural operator%(const Natural& a, const Natural& b);

    Natural& operator+=(const Natural& b) { value_ += b.value_; return *this; }
    Natural& operator*=(const Natural& b) { value_ *= b.value_; return *this; }
    Natural& operator-=(const Natural& b) { *this = *this - b; return *this; }

    friend bool operator==(const Natural& a, const Natural& b) = default;
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
        int c = a.value_.compare(b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    static Natural pow(const Natural& base, std::uint64_t exp);

    friend std::ostream& operator<<(std::ostream& os, const Natural& n);

private:
    struct unchecked {};
    Natural(unchecked, Integer v) : value_(std::move(v)) {}

    static Integer check_sign(Integer v) {
        if (v.sign() < 0)
            throw std::domain_error("Natural cannot be negative");
        return v;
    }

    Integer value_{0};
};

/// Quotient and remainder in one pass.
std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b);

/// |a - b| on naturals.
Natural abs_diff(const Natural& a, const Natural& b);

}  // namespace arithmon
