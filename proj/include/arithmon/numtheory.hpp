#pragma once

#include "arithmon/natural.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace arithmon {

Natural gcd(const Natural& a, const Natural& b);

/// lcm(a, b); both arguments must be positive.
Natural lcm(const Natural& a, const Natural& b);

/// Bezout decomposition g = x*a + y*b with g = gcd(a, b).
struct XgcdResult {
    Natural g;
    Integer x;
    Integer y;
};

XgcdResult extended_gcd(const Natural& a, const Natural& b);

/// Deterministic trial division; intended for the small primes that
/// appear as bases and moduli, not for cryptographic sizes.
bool is_prime(const Natural& n);

/// The arithmetic progression {a*i + b : i >= 0} with 0 <= b < a,
/// written aN+b. Every natural lying in the class is congruent to b
/// mod a, and conversely, so membership is a single remainder test.
class CongruenceClass {
public:
    CongruenceClass(Natural modulus, Natural residue);

    /// The full set of naturals, 1N+0.
    static CongruenceClass all() { return CongruenceClass(1, 0); }

    const Natural& modulus() const { return modulus_; }
    const Natural& residue() const { return residue_; }

    bool contains(const Natural& n) const { return n % modulus_ == residue_; }
    bool is_full() const { return modulus_ == Natural(1); }

    /// "12N+10", "12N" when the residue is zero, "N" for the full set.
    std::string str() const;

    friend bool operator==(const CongruenceClass&, const CongruenceClass&) = default;
    friend std::ostream& operator<<(std::ostream& os, const CongruenceClass& c);

private:
    Natural modulus_;
    Natural residue_;
};

/// Free-function membership test, same as CongruenceClass::contains.
inline bool member(const CongruenceClass& c, const Natural& n) {
    return c.contains(n);
}

/// Intersection of two congruence classes. By the Chinese remainder
/// theorem this is either empty (residues incompatible modulo the gcd
/// of the moduli) or a single class whose modulus is the lcm.
std::optional<CongruenceClass> intersect(const CongruenceClass& lhs,
                                         const CongruenceClass& rhs);

}  // namespace arithmon
