#include "arithmon/classical.hpp"

#include <ostream>

namespace arithmon {

std::ostream& operator<<(std::ostream& os, const BicyclicElement& e) {
    return os << e.str();
}

std::ostream& operator<<(std::ostream& os, const LeechElement& e) {
    return os << e.str();
}

Natural monus(const Natural& y, const Natural& x) {
    return x <= y ? y - x : Natural(0);
}

BicyclicElement bicyclic_compose(const BicyclicElement& lhs,
                                 const BicyclicElement& rhs) {
    const Natural& d = lhs.b;
    const Natural& c = lhs.a;
    const Natural& b = rhs.b;
    const Natural& a = rhs.a;
    return {d + monus(b, c), monus(c, b) + a};
}

BicyclicElement bicyclic_dagger(const BicyclicElement& e) {
    return {e.a, e.b};
}

FinitePartialInjection bicyclic_to_window(const BicyclicElement& e,
                                          const Natural& window) {
    FinitePartialInjection t(window);
    const std::uint64_t N = t.window();
    for (std::uint64_t n = 0; n <= N; ++n) {
        if (Natural(n) < e.a) continue;
        Natural v = Natural(n) - e.a + e.b;
        if (v <= Natural(N))
            t.set(n, std::move(v));
        else
            t.mark_clipped(n);
    }
    return t;
}

LeechElement::LeechElement(Natural m_, Natural n_)
    : m(std::move(m_)), n(std::move(n_)) {
    if (m.is_zero() || n.is_zero())
        throw std::domain_error("components must be positive");
}

LeechElement leech_compose(const LeechElement& lhs, const LeechElement& rhs) {
    Natural g = gcd(lhs.n, rhs.m);
    return LeechElement(lhs.m * (rhs.m / g), (lhs.n / g) * rhs.n);
}

LeechElement leech_compose_lcm(const LeechElement& lhs, const LeechElement& rhs) {
    Natural l = lcm(lhs.n, rhs.m);
    return LeechElement(lhs.m * (l / lhs.n), rhs.n * (l / rhs.m));
}

LeechElement leech_dagger(const LeechElement& e) {
    return LeechElement(e.n, e.m);
}

ArithElement leech_embed(const LeechElement& e) {
    return ArithElement::normal_form(CongruenceClass(e.n, 0),
                                     CongruenceClass(e.m, 0));
}

LeechElement bicyclic_exp_embed(const Natural& p, const BicyclicElement& e) {
    if (p < Natural(2))
        throw std::domain_error("exponential embedding needs base >= 2");
    return LeechElement(Natural::pow(p, e.b.to_u64()),
                        Natural::pow(p, e.a.to_u64()));
}

}  // namespace arithmon
