#include "arithmon/natural.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace arithmon {

Natural Natural::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty string is not a natural number");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("invalid natural number literal: '" +
                                        std::string(text) + "'");
    return Natural(unchecked{}, Integer(std::string(text)));
}

std::uint64_t Natural::to_u64() const {
    if (value_ > std::numeric_limits<std::uint64_t>::max())
        throw std::domain_error("value too large for 64-bit conversion: " + str());
    return static_cast<std::uint64_t>(value_);
}

Natural operator-(const Natural& a, const Natural& b) {
    if (b.value_ > a.value_)
        throw std::domain_error("natural subtraction underflow: " + a.str() +
                                " - " + b.str());
    return Natural(Natural::unchecked{}, a.value_ - b.value_);
}

Natural operator/(const Natural& a, const Natural& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero");
    return Natural(Natural::unchecked{}, a.value_ / b.value_);
}

Natural operator%(const Natural& a, const Natural& b) {
    if (b.is_zero())
        throw std::domain_error("modulo by zero");
    return Natural(Natural::unchecked{}, a.value_ % b.value_);
}

Natural Natural::pow(const Natural& base, std::uint64_t exp) {
    Natural result = 1;
    Natural sq = base;
    while (exp != 0) {
        if (exp & 1) result *= sq;
        sq *= sq;
        exp >>= 1;
    }
    return result;
}

std::pair<Natural, Natural> divmod(const Natural& a, const Natural& b) {
    if (b.is_zero())
        throw std::domain_error("division by zero");
    Integer q, r;
    boost::multiprecision::divide_qr(a.value(), b.value(), q, r);
    return {Natural(std::move(q)), Natural(std::move(r))};
}

Natural abs_diff(const Natural& a, const Natural& b) {
    return a >= b ? a - b : b - a;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_;
}

}  // namespace arithmon
