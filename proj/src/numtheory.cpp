#include "arithmon/numtheory.hpp"

#include <ostream>
#include <utility>

namespace arithmon {

Natural gcd(const Natural& a, const Natural& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd(0,0) is undefined");
    return Natural(boost::multiprecision::gcd(a.value(), b.value()));
}

Natural lcm(const Natural& a, const Natural& b) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("lcm requires positive arguments");
    return (a / gcd(a, b)) * b;
}

XgcdResult extended_gcd(const Natural& a, const Natural& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("extended_gcd(0,0) is undefined");
    // Iterative Bezout: maintain r = x*a + y*b for successive remainders.
    Integer old_r = a.value(), r = b.value();
    Integer old_x = 1, x = 0;
    Integer old_y = 0, y = 1;
    while (!r.is_zero()) {
        Integer q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_x -= q * x; std::swap(old_x, x);
        old_y -= q * y; std::swap(old_y, y);
    }
    return {Natural(old_r), old_x, old_y};
}

bool is_prime(const Natural& n) {
    const Integer& v = n.value();
    if (v < 2) return false;
    if (v < 4) return true;
    if (v % 2 == 0 || v % 3 == 0) return false;
    for (Integer d = 5; d * d <= v; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
}

CongruenceClass::CongruenceClass(Natural modulus, Natural residue)
    : modulus_(std::move(modulus)), residue_(std::move(residue)) {
    if (modulus_.is_zero())
        throw std::domain_error("congruence class needs a positive modulus");
    if (residue_ >= modulus_)
        throw std::domain_error("congruence class residue " + residue_.str() +
                                " not reduced modulo " + modulus_.str());
}

std::string CongruenceClass::str() const {
    if (is_full()) return "N";
    std::string s = modulus_.str() + "N";
    if (!residue_.is_zero()) s += "+" + residue_.str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const CongruenceClass& c) {
    return os << c.str();
}

std::optional<CongruenceClass> intersect(const CongruenceClass& lhs,
                                         const CongruenceClass& rhs) {
    const Natural& a = lhs.modulus();
    const Natural& b = lhs.residue();
    const Natural& c = rhs.modulus();
    const Natural& d = rhs.residue();

    XgcdResult e = extended_gcd(a, c);
    Integer diff = d.value() - b.value();
    Integer rem = diff % e.g.value();
    if (!rem.is_zero())
        return std::nullopt;

    // Solve n == b (mod a), n == d (mod c): with g = x*a + y*c the witness
    // b + a*x*(d-b)/g satisfies both congruences; reduce it modulo lcm(a, c).
    Natural big = lcm(a, c);
    Integer t = diff / e.g.value();
    Integer witness = b.value() + a.value() * e.x * t;
    Integer reduced = witness % big.value();
    if (reduced.sign() < 0) reduced += big.value();
    return CongruenceClass(big, Natural(reduced));
}

}  // namespace arithmon
