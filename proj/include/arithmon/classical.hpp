#pragma once

#include "arithmon/arith.hpp"
#include "arithmon/oracle.hpp"

#include <iosfwd>
#include <string>

namespace arithmon {

/// Element [b,a] of the bicyclic monoid: as a partial injection,
/// subtract a (where possible), then add b. Every pair of naturals is
/// an element; (0,0) is the identity.
struct BicyclicElement {
    Natural b;
    Natural a;

    bool is_identity() const { return b.is_zero() && a.is_zero(); }
    std::string str() const { return "[" + b.str() + "," + a.str() + "]"; }
    friend bool operator==(const BicyclicElement&, const BicyclicElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BicyclicElement& e);
};

/// Truncated subtraction: y - x, floored at zero.
Natural monus(const Natural& y, const Natural& x);

/// (d,c)(b,a) = (d + (b∸c), (c∸b) + a) — the overlap between the inner
/// halves cancels and the excess survives on the matching side.
BicyclicElement bicyclic_compose(const BicyclicElement& lhs,
                                 const BicyclicElement& rhs);

/// Generalized inverse [b,a] |-> [a,b].
BicyclicElement bicyclic_dagger(const BicyclicElement& e);

/// The graph of [b,a] on {0..N}: n |-> n - a + b for n >= a. Images
/// beyond N are marked clipped (the map is defined there but the
/// window cannot hold the value).
FinitePartialInjection bicyclic_to_window(const BicyclicElement& e,
                                          const Natural& window);

/// Element (m,n) of the multiplicative analogue of the bicyclic
/// monoid: both components positive, (1,1) the identity, idempotents
/// exactly the (p,p). Pairs are deliberately not reduced: (2,4) and
/// (1,2) are different elements.
struct LeechElement {
    LeechElement(Natural m_, Natural n_);

    Natural m;
    Natural n;

    bool is_identity() const { return m == Natural(1) && n == Natural(1); }
    std::string str() const { return "[" + m.str() + "," + n.str() + "]"; }
    friend bool operator==(const LeechElement&, const LeechElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const LeechElement& e);
};

/// (m,n)(p,q) = (mp/gcd(n,p), nq/gcd(n,p)).
LeechElement leech_compose(const LeechElement& lhs, const LeechElement& rhs);

/// Same composite via (m·lcm(n,p)/n, q·lcm(n,p)/p); agrees with
/// leech_compose on every input, since gcd(n,p)·lcm(n,p) = np.
LeechElement leech_compose_lcm(const LeechElement& lhs, const LeechElement& rhs);

/// Generalized inverse (m,n) |-> (n,m).
LeechElement leech_dagger(const LeechElement& e);

/// Injective homomorphism into the congruence-class monoid:
/// (m,n) |-> the normal form with dom = nN, img = mN (divide by n,
/// multiply by m).
ArithElement leech_embed(const LeechElement& e);

/// Exponential embedding of the bicyclic monoid at base p >= 2:
/// [b,a] |-> (p^b, p^a). Homomorphic because monus in the exponent
/// matches gcd cancellation of prime powers.
LeechElement bicyclic_exp_embed(const Natural& p, const BicyclicElement& e);

}  // namespace arithmon
