#include "arithmon/padic.hpp"

#include "arithmon/arith.hpp"
#include "arithmon/numtheory.hpp"

#include <algorithm>

namespace arithmon {

namespace {

void require_prime(const Natural& p) {
    if (!is_prime(p))
        throw std::domain_error("base " + p.str() + " is not prime");
}

}  // namespace

Natural ord(const Natural& p, const Natural& n) {
    require_prime(p);
    if (n.is_zero())
        throw std::domain_error("order of zero is undefined");
    Natural k = 0;
    Natural rest = n;
    while (true) {
        auto [q, r] = divmod(rest, p);
        if (!r.is_zero()) break;
        rest = q;
        k += 1;
    }
    return k;
}

PAdicValue norm(const Natural& p, const Natural& n) {
    require_prime(p);
    if (n.is_zero()) return Rational(0);
    return Rational(1, Natural::pow(p, ord(p, n).to_u64()));
}

PAdicValue distance(const Natural& p, const Natural& a, const Natural& b) {
    return norm(p, abs_diff(a, b));
}

PAdicValue norm_via_polycyclic(const Natural& p, const Natural& n) {
    require_prime(p);
    if (n.is_zero())
        throw std::domain_error("norm characterization needs n >= 1");

    // Walk up the chain of divide-by-p^k maps while they stay defined
    // at n, collecting the values; the smallest one over n is the norm.
    Natural best = *apply(generator(1, 0), n);  // k = 0, value n
    Natural pk = 1;
    while (true) {
        Natural next = pk * p;
        std::optional<Natural> v = apply(generator(next, 0), n);
        if (!v) break;
        pk = next;
        best = std::min(best, *v);
    }
    return Rational(best, n);
}

CantorPoint::CantorPoint(Natural p, DigitOrder order)
    : p_(std::move(p)), order_(order) {
    require_prime(p_);
}

CantorPoint CantorPoint::constant_zero(const Natural& p) {
    return CantorPoint(p, DigitOrder::msb_first);
}

CantorPoint CantorPoint::from_word(const Natural& p,
                                   std::vector<std::uint32_t> prefix,
                                   DigitOrder order) {
    CantorPoint g(p, order);
    for (std::uint32_t d : prefix)
        if (Natural(d) >= p)
            throw std::domain_error("digit " + std::to_string(d) +
                                    " out of range for base " + p.str());
    g.prefix_ = std::move(prefix);
    return g;
}

CantorPoint CantorPoint::from_stream(const Natural& p,
                                     std::function<std::uint32_t(std::uint64_t)> fn,
                                     std::uint64_t inspection_bound) {
    CantorPoint g(p, DigitOrder::msb_first);
    g.fn_ = std::move(fn);
    g.bound_ = inspection_bound;
    return g;
}

std::uint32_t CantorPoint::digit(std::uint64_t i) const {
    std::uint32_t d;
    if (fn_) {
        if (i >= bound_)
            throw std::domain_error("stream inspected beyond its declared bound");
        d = fn_(i);
    } else {
        d = i < prefix_.size() ? prefix_[i] : 0;
    }
    if (Natural(d) >= p_)
        throw std::domain_error("stream produced digit " + std::to_string(d) +
                                " out of range for base " + p_.str());
    return d;
}

CantorPoint cant(const Natural& p, const Natural& a, DigitOrder order) {
    require_prime(p);
    if (a.is_zero())
        throw std::domain_error("digit-word point needs a >= 1");
    std::vector<std::uint32_t> digits;
    Natural rest = a;
    while (!rest.is_zero()) {
        auto [q, r] = divmod(rest, p);
        digits.push_back(static_cast<std::uint32_t>(r.to_u64()));
        rest = q;
    }
    // The loop produces least significant first.
    if (order == DigitOrder::msb_first)
        std::reverse(digits.begin(), digits.end());
    return CantorPoint::from_word(p, std::move(digits), order);
}

PAdicValue eval_gamma(const CantorPoint& gamma, const Natural& n) {
    if (n.is_zero())
        throw std::domain_error("evaluator needs n >= 1");
    const Natural& p = gamma.prime();

    // Prefix by prefix: value = num of the first j digits, pj = p^j.
    // The map R(pj, value) is defined at n iff n ≡ value (mod pj); once
    // pj exceeds n that degenerates to n = value exactly (worth one
    // final look — it contributes 0), and a value above n can never
    // match again, so the loop inspects at most floor(log_p n)+1 digits.
    Rational best(1);  // the empty prefix contributes n/n
    Natural value = 0;
    Natural pj = 1;
    for (std::uint64_t j = 0;; ++j) {
        value = value * p + Natural(gamma.digit(j));
        pj *= p;
        if (value > n) break;
        if (n % pj == value)
            best = std::min(best, Rational((n - value) / pj, n));
        if (pj > n) break;
    }
    return best;
}

}  // namespace arithmon
