#include "arithmon/arith.hpp"

#include <ostream>

namespace arithmon {

const CongruenceClass& ArithElement::dom() const {
    if (!nf_) throw std::domain_error("zero element has no domain class");
    return nf_->dom;
}

const CongruenceClass& ArithElement::img() const {
    if (!nf_) throw std::domain_error("zero element has no image class");
    return nf_->img;
}

std::string ArithElement::str() const {
    if (is_zero()) return "zero";
    if (is_identity()) return "id";
    const CongruenceClass& d = nf_->dom;
    const CongruenceClass& i = nf_->img;
    std::string down = "R(" + d.modulus().str() + "," + d.residue().str() + ")";
    std::string up = "R‡(" + i.modulus().str() + "," + i.residue().str() + ")";
    if (i.is_full()) return down;
    if (d.is_full()) return up;
    return up + "∘" + down;
}

std::ostream& operator<<(std::ostream& os, const ArithElement& e) {
    return os << e.str();
}

ArithElement generator(const Natural& a, const Natural& b) {
    if (a.is_zero())
        throw std::domain_error("generator modulus must be positive");
    if (b >= a)
        throw std::domain_error("generator residue " + b.str() +
                                " not reduced modulo " + a.str());
    return ArithElement::normal_form(CongruenceClass(a, b),
                                     CongruenceClass::all());
}

ArithElement dagger(const ArithElement& e) {
    if (e.is_zero()) return e;
    return ArithElement::normal_form(e.img(), e.dom());
}

std::optional<Natural> apply(const ArithElement& e, const Natural& n) {
    if (e.is_zero()) return std::nullopt;
    const Natural& a = e.dom().modulus();
    const Natural& b = e.dom().residue();
    if (n % a != b) return std::nullopt;
    return e.img().modulus() * ((n - b) / a) + e.img().residue();
}

ArithElement compose(const ArithElement& f, const ArithElement& g) {
    if (f.is_zero() || g.is_zero()) return ArithElement::zero();

    // Middle classes: g lands in cN+d, f picks up from eN+f0.
    const Natural& c = g.img().modulus();
    const Natural& d = g.img().residue();
    const Natural& e = f.dom().modulus();
    const Natural& f0 = f.dom().residue();

    std::optional<CongruenceClass> meet = intersect(g.img(), f.dom());
    if (!meet) return ArithElement::zero();
    const Natural& r = meet->residue();
    Natural gamma = gcd(c, e);

    // Pull the witness r back through g and push it forward through f.
    // Both divisions are exact because r lies in both middle classes,
    // and both residues land below their moduli because r < lcm(c, e).
    const Natural& a = g.dom().modulus();
    const Natural& b = g.dom().residue();
    const Natural& gi = f.img().modulus();
    const Natural& h = f.img().residue();
    CongruenceClass dom(a * (e / gamma), a * ((r - d) / c) + b);
    CongruenceClass img(gi * (c / gamma), gi * ((r - f0) / e) + h);
    return ArithElement::normal_form(std::move(dom), std::move(img));
}

ArithElement compose_generator_pair(const Natural& c, const Natural& d,
                                    const Natural& a, const Natural& b) {
    if (c.is_zero() || a.is_zero())
        throw std::domain_error("generator modulus must be positive");
    if (d >= c || b >= a)
        throw std::domain_error("generator residue not reduced");
    return generator(a * c, a * d + b);
}

ArithElement initial_idempotent(const ArithElement& e) {
    if (e.is_zero()) return e;
    return ArithElement::normal_form(e.dom(), e.dom());
}

ArithElement final_idempotent(const ArithElement& e) {
    if (e.is_zero()) return e;
    return ArithElement::normal_form(e.img(), e.img());
}

bool is_idempotent(const ArithElement& e) {
    return e.is_zero() || e.dom() == e.img();
}

ArithElement compose_chain(const std::vector<std::pair<Natural, Natural>>& pairs) {
    Natural modulus = 1;
    Natural residue = 0;
    // Walk right to left: the rightmost generator contributes its residue
    // with unit weight, and each step left scales by the moduli passed.
    Natural weight = 1;
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        const Natural& a = it->first;
        const Natural& b = it->second;
        if (a.is_zero() || b >= a)
            throw std::domain_error("chain entry R(" + a.str() + "," + b.str() +
                                    ") is not a valid generator");
        residue += b * weight;
        weight *= a;
        modulus *= a;
    }
    return generator(modulus, residue);
}

std::vector<std::pair<Natural, Natural>>
factor_into_prime_generators(const Natural& a, const Natural& b) {
    if (a < Natural(2))
        throw std::domain_error("factorization needs modulus >= 2");
    if (b >= a)
        throw std::domain_error("residue " + b.str() +
                                " not reduced modulo " + a.str());

    std::vector<Natural> primes;  // nondecreasing
    Natural rest = a;
    for (Natural p = 2; p * p <= rest;) {
        if ((rest % p).is_zero()) {
            primes.push_back(p);
            rest = rest / p;
        } else {
            p += 1;
        }
    }
    if (rest > Natural(1)) primes.push_back(rest);

    // Mixed-radix digits of b, least-significant column first; the
    // rightmost generator's base is the last prime.
    std::vector<std::pair<Natural, Natural>> out(primes.size(),
                                                 {Natural(0), Natural(0)});
    Natural y = b;
    for (std::size_t j = primes.size(); j-- > 0;) {
        auto [q, digit] = divmod(y, primes[j]);
        out[j] = {primes[j], digit};
        y = q;
    }
    return out;
}

}  // namespace arithmon
