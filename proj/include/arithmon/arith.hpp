#pragma once

#include "arithmon/numtheory.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arithmon {

/// An element of the monoid of monotone partial injections between
/// congruence classes of the naturals: either the nowhere-defined zero
/// map, or the unique monotone bijection dom -> img for a pair of
/// classes. The normal form with dom = aN+b and img = cN+d sends
/// a*i + b to c*i + d; composition goes through the CRT intersection
/// of the middle classes.
///
/// Throughout this library, compose(f, g) applies g first, matching
/// the juxtaposition order f*g used by the CLI expression language.
class ArithElement {
public:
    static ArithElement zero() { return ArithElement(); }
    static ArithElement identity() {
        return normal_form(CongruenceClass::all(), CongruenceClass::all());
    }
    static ArithElement normal_form(CongruenceClass dom, CongruenceClass img) {
        ArithElement e;
        e.nf_ = NF{std::move(dom), std::move(img)};
        return e;
    }

    bool is_zero() const { return !nf_.has_value(); }
    bool is_identity() const {
        return nf_ && nf_->dom.is_full() && nf_->img.is_full();
    }

    /// Accessors throw on the zero element, which has no classes.
    const CongruenceClass& dom() const;
    const CongruenceClass& img() const;

    /// "zero", "id", "R(a,b)", "R‡(c,d)" or "R‡(c,d)∘R(a,b)"; every
    /// form is accepted back by the expression parser.
    std::string str() const;

    friend bool operator==(const ArithElement&, const ArithElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const ArithElement& e);

private:
    struct NF {
        CongruenceClass dom;
        CongruenceClass img;
        friend bool operator==(const NF&, const NF&) = default;
    };
    std::optional<NF> nf_;  // disengaged = zero element
};

/// The basic generator with domain aN+b and full image: a*i + b |-> i.
/// Requires a >= 1 and b < a; generator(1,0) is the identity.
ArithElement generator(const Natural& a, const Natural& b);

/// Generalized inverse: swaps dom and img (an involution; zero is fixed).
ArithElement dagger(const ArithElement& e);

/// Evaluate at n; disengaged result means "undefined there", not an error.
std::optional<Natural> apply(const ArithElement& e, const Natural& n);

/// Normal form of f after g (g applied first). Zero when the middle
/// classes img(g) and dom(f) have empty intersection.
ArithElement compose(const ArithElement& f, const ArithElement& g);

/// Closed form for a pair of generators: the composite of R(c,d) after
/// R(a,b) is R(ac, ad+b). Must agree with compose on the same inputs.
ArithElement compose_generator_pair(const Natural& c, const Natural& d,
                                    const Natural& a, const Natural& b);

/// Partial identity on dom(e), equal to compose(dagger(e), e).
ArithElement initial_idempotent(const ArithElement& e);

/// Partial identity on img(e), equal to compose(e, dagger(e)).
ArithElement final_idempotent(const ArithElement& e);

/// Zero and the partial identities (dom = img) are the idempotents.
bool is_idempotent(const ArithElement& e);

/// Closed form for a chain of generators, listed leftmost factor first
/// (the last list entry is applied first). Equals the left fold of
/// compose over the generators: the moduli multiply and the residues
/// combine as mixed-radix digits read off the right end. The empty
/// chain is the identity.
ArithElement compose_chain(const std::vector<std::pair<Natural, Natural>>& pairs);

/// Split R(a,b), a >= 2, into prime-modulus generators: the first
/// components are the prime factors of a in nondecreasing order, the
/// second components the mixed-radix digits of b in those column
/// bases. compose_chain over the result reproduces R(a,b) exactly.
std::vector<std::pair<Natural, Natural>>
factor_into_prime_generators(const Natural& a, const Natural& b);

}  // namespace arithmon
