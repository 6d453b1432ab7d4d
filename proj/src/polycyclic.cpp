#include "arithmon/polycyclic.hpp"

#include <algorithm>
#include <ostream>

namespace arithmon {

Word::Word(std::uint32_t k) : k_(k) {
    if (k < 2) throw std::domain_error("alphabet size must be at least 2");
}

Word::Word(std::uint32_t k, std::vector<std::uint32_t> digits)
    : k_(k), digits_(std::move(digits)) {
    if (k < 2) throw std::domain_error("alphabet size must be at least 2");
    for (std::uint32_t d : digits_)
        if (d >= k)
            throw std::domain_error("digit " + std::to_string(d) +
                                    " out of range for alphabet of size " +
                                    std::to_string(k));
}

std::string Word::str() const {
    std::string s;
    for (std::uint32_t d : digits_) {
        if (d <= 9)
            s += static_cast<char>('0' + d);
        else
            s += "[" + std::to_string(d) + "]";
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.str();
}

Word concat(const Word& l, const Word& r) {
    if (l.k() != r.k())
        throw std::domain_error("cannot concatenate words over different alphabets");
    std::vector<std::uint32_t> d = l.digits();
    d.insert(d.end(), r.digits().begin(), r.digits().end());
    return Word(l.k(), std::move(d));
}

Natural num(const Word& w) {
    Natural acc = 0;
    for (std::uint32_t d : w.digits()) acc = acc * Natural(w.k()) + Natural(d);
    return acc;
}

std::optional<Word> left_complement(const Word& w, const Word& v) {
    if (w.k() != v.k())
        throw std::domain_error("cannot compare words over different alphabets");
    if (v.len() > w.len()) return std::nullopt;
    std::size_t cut = w.len() - v.len();
    if (!std::equal(v.digits().begin(), v.digits().end(),
                    w.digits().begin() + cut))
        return std::nullopt;
    return Word(w.k(), {w.digits().begin(), w.digits().begin() + cut});
}

PolyElement::PolyElement(std::uint32_t k, bool zero, Word up, Word down)
    : k_(k), zero_(zero), up_(std::move(up)), down_(std::move(down)) {}

PolyElement PolyElement::zero(std::uint32_t k) {
    return PolyElement(k, true, Word(k), Word(k));
}

PolyElement PolyElement::identity(std::uint32_t k) {
    return PolyElement(k, false, Word(k), Word(k));
}

PolyElement PolyElement::pair(Word up, Word down) {
    if (up.k() != down.k())
        throw std::domain_error("word pair must share one alphabet");
    std::uint32_t k = up.k();
    return PolyElement(k, false, std::move(up), std::move(down));
}

PolyElement PolyElement::generator(std::uint32_t k, std::uint32_t x) {
    return pair(Word(k), Word(k, {x}));
}

const Word& PolyElement::up() const {
    if (zero_) throw std::domain_error("zero element has no word pair");
    return up_;
}

const Word& PolyElement::down() const {
    if (zero_) throw std::domain_error("zero element has no word pair");
    return down_;
}

std::string PolyElement::str() const {
    if (zero_) return "zero";
    return "P(" + std::to_string(k_) + ";\"" + up_.str() + "\",\"" +
           down_.str() + "\")";
}

std::ostream& operator<<(std::ostream& os, const PolyElement& e) {
    return os << e.str();
}

PolyElement poly_compose(const PolyElement& lhs, const PolyElement& rhs) {
    if (lhs.k() != rhs.k())
        throw std::domain_error("cannot compose over different alphabets");
    if (lhs.is_zero() || rhs.is_zero()) return PolyElement::zero(lhs.k());

    const Word& w = lhs.down();
    const Word& v = rhs.up();
    if (auto r = left_complement(w, v))
        return PolyElement::pair(lhs.up(), concat(*r, rhs.down()));
    if (auto s = left_complement(v, w))
        return PolyElement::pair(concat(*s, lhs.up()), rhs.down());
    return PolyElement::zero(lhs.k());
}

PolyElement poly_dagger(const PolyElement& e) {
    if (e.is_zero()) return e;
    return PolyElement::pair(e.down(), e.up());
}

ArithElement theta(const Natural& k, const PolyElement& e) {
    if (k < Natural(2) || k.to_u64() != e.k())
        throw std::domain_error("alphabet mismatch in embedding");
    if (e.is_zero()) return ArithElement::zero();
    Natural kk = k;
    CongruenceClass dom(Natural::pow(kk, e.down().len()), num(e.down()));
    CongruenceClass img(Natural::pow(kk, e.up().len()), num(e.up()));
    return ArithElement::normal_form(std::move(dom), std::move(img));
}

KBNElement::KBNElement(Natural m_, Natural n_)
    : m(std::move(m_)), n(std::move(n_)) {
    if (m.is_zero() && !n.is_zero())
        throw std::domain_error("length zero forces value zero");
}

std::ostream& operator<<(std::ostream& os, const KBNElement& e) {
    return os << e.str();
}

bool kbn_valid(const Natural& k, const KBNElement& e) {
    if (k < Natural(2)) return false;
    return e.n < Natural::pow(k, e.m.to_u64());
}

namespace {

void require_valid(const Natural& k, const KBNElement& e) {
    if (k < Natural(2))
        throw std::domain_error("base must be at least 2");
    if (!kbn_valid(k, e))
        throw std::domain_error("pair " + e.str() +
                                " violates the bound for base " + k.str());
}

}  // namespace

KBNElement kbn_compose(const Natural& k, const KBNElement& lhs,
                       const KBNElement& rhs) {
    require_valid(k, lhs);
    require_valid(k, rhs);
    Natural shift = Natural::pow(k, rhs.m.to_u64());
    return KBNElement(lhs.m + rhs.m, shift * lhs.n + rhs.n);
}

KBNElement mu(const Word& w) {
    return KBNElement(Natural(w.len()), num(w));
}

Word mu_inverse(std::uint32_t k, const KBNElement& e) {
    require_valid(Natural(k), e);
    std::size_t m = e.m.to_u64();
    std::vector<std::uint32_t> digits(m, 0);
    Natural rest = e.n;
    for (std::size_t i = m; i-- > 0;) {
        auto [q, r] = divmod(rest, Natural(k));
        digits[i] = static_cast<std::uint32_t>(r.to_u64());
        rest = q;
    }
    return Word(k, std::move(digits));
}

bool k_residue(const Natural& k, const KBNElement& big, const KBNElement& small) {
    require_valid(k, big);
    require_valid(k, small);
    if (small.m > big.m) return false;
    return big.n % Natural::pow(k, small.m.to_u64()) == small.n;
}

KBNElement kbn_cancel(const Natural& k, const KBNElement& big,
                      const KBNElement& small) {
    if (!k_residue(k, big, small))
        throw std::domain_error("cannot cancel " + small.str() + " from " +
                                big.str() + ": not a residue");
    Natural shift = Natural::pow(k, small.m.to_u64());
    return KBNElement(big.m - small.m, (big.n - small.n) / shift);
}

namespace {

/// Modulus as a power of k, or disengaged if it is not one.
std::optional<Natural> exponent_of(const Natural& k, const Natural& modulus) {
    Natural e = 0;
    Natural rest = modulus;
    while (rest > Natural(1)) {
        if (!(rest % k).is_zero()) return std::nullopt;
        rest = rest / k;
        e += 1;
    }
    return e;
}

KBNElement condensed_side(const Natural& k, const CongruenceClass& c) {
    auto e = exponent_of(k, c.modulus());
    if (!e)
        throw std::domain_error("modulus " + c.modulus().str() +
                                " is not a power of " + k.str());
    return KBNElement(*e, c.residue());
}

}  // namespace

ArithElement poly_compose_arith(const Natural& k, const ArithElement& lhs,
                                const ArithElement& rhs) {
    if (k < Natural(2))
        throw std::domain_error("base must be at least 2");
    if (lhs.is_zero() || rhs.is_zero()) return ArithElement::zero();

    KBNElement up_l = condensed_side(k, lhs.img());    // (x, X)
    KBNElement down_l = condensed_side(k, lhs.dom());  // (w, W)
    KBNElement up_r = condensed_side(k, rhs.img());    // (v, V)
    KBNElement down_r = condensed_side(k, rhs.dom());  // (u, U)

    auto cls = [&k](const KBNElement& e) {
        return CongruenceClass(Natural::pow(k, e.m.to_u64()), e.n);
    };

    // The middle words: lhs's down side against rhs's up side. Whichever
    // is a suffix of the other cancels; the leftover shifts to the far side.
    if (k_residue(k, down_l, up_r)) {
        KBNElement rest = kbn_cancel(k, down_l, up_r);
        KBNElement dom = kbn_compose(k, rest, down_r);
        return ArithElement::normal_form(cls(dom), cls(up_l));
    }
    if (k_residue(k, up_r, down_l)) {
        KBNElement rest = kbn_cancel(k, up_r, down_l);
        KBNElement img = kbn_compose(k, rest, up_l);
        return ArithElement::normal_form(cls(down_r), cls(img));
    }
    return ArithElement::zero();
}

}  // namespace arithmon
