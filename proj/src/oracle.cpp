#include "arithmon/oracle.hpp"

namespace arithmon {

FinitePartialInjection::FinitePartialInjection(const Natural& window)
    : images_(window.to_u64() + 1), clipped_(window.to_u64() + 1, false) {}

FinitePartialInjection FinitePartialInjection::identity(const Natural& window) {
    FinitePartialInjection t(window);
    for (std::uint64_t n = 0; n <= t.window(); ++n) t.set(n, n);
    return t;
}

void FinitePartialInjection::set(std::uint64_t n, Natural v) {
    if (images_.at(n) || clipped_.at(n))
        throw std::domain_error("table already decided at " + std::to_string(n));
    if (!used_images_.insert(v).second)
        throw std::domain_error("table would not be injective: image " +
                                v.str() + " reused");
    images_[n] = std::move(v);
}

void FinitePartialInjection::mark_clipped(std::uint64_t n) {
    if (images_.at(n))
        throw std::domain_error("cannot clip a defined point");
    clipped_[n] = true;
    any_clipped_ = true;
}

std::size_t FinitePartialInjection::size() const {
    std::size_t count = 0;
    for (const auto& v : images_)
        if (v) ++count;
    return count;
}

FinitePartialInjection from_arith(const ArithElement& e, const Natural& window) {
    FinitePartialInjection t(window);
    for (std::uint64_t n = 0; n <= t.window(); ++n) {
        if (auto v = apply(e, Natural(n))) t.set(n, *v);
    }
    return t;
}

FinitePartialInjection oracle_compose(const FinitePartialInjection& f,
                                      const FinitePartialInjection& g) {
    if (f.window() != g.window())
        throw std::domain_error("cannot compose tables over different windows");
    const std::uint64_t N = f.window();
    FinitePartialInjection t{Natural(N)};
    for (std::uint64_t n = 0; n <= N; ++n) {
        if (g.clipped(n)) {
            t.mark_clipped(n);
            continue;
        }
        std::optional<Natural> mid = g.at(n);
        if (!mid) continue;
        if (*mid > Natural(N)) {
            // g(n) exists but f's table cannot see it.
            t.mark_clipped(n);
            continue;
        }
        std::uint64_t m = mid->to_u64();
        if (f.clipped(m)) {
            t.mark_clipped(n);
            continue;
        }
        if (auto v = f.at(m)) t.set(n, *v);
    }
    return t;
}

FinitePartialInjection oracle_dagger(const FinitePartialInjection& f) {
    if (f.has_clipped_points())
        throw std::domain_error(
            "cannot invert a table with clipped points: the converse would "
            "have unknown entries at unknown positions");
    const std::uint64_t N = f.window();
    FinitePartialInjection t{Natural(N)};
    for (std::uint64_t n = 0; n <= N; ++n) {
        std::optional<Natural> v = f.at(n);
        if (v && *v <= Natural(N)) t.set(v->to_u64(), Natural(n));
    }
    return t;
}

std::optional<std::uint64_t> first_disagreement(const FinitePartialInjection& f,
                                                const FinitePartialInjection& g,
                                                const Natural& margin) {
    if (f.window() != g.window())
        throw std::domain_error("cannot compare tables over different windows");
    const std::uint64_t N = f.window();
    if (margin >= Natural(N))
        throw std::domain_error("margin must be below the window bound");
    const Natural core = Natural(N) - margin;
    const std::uint64_t core64 = core.to_u64();

    for (std::uint64_t n = 0; n <= core64; ++n) {
        if (f.clipped(n) || g.clipped(n)) continue;
        std::optional<Natural> fv = f.at(n);
        std::optional<Natural> gv = g.at(n);
        if (!fv && !gv) continue;
        if (fv && gv) {
            if (*fv == *gv) continue;
            // Differing images are only tolerated when one of them has
            // escaped the core — that is window truncation, not error.
            if (*fv > core || *gv > core) continue;
            return n;
        }
        // One side defined: truncation noise if its image escaped the
        // core, a genuine disagreement otherwise.
        const Natural& v = fv ? *fv : *gv;
        if (v > core) continue;
        return n;
    }
    return std::nullopt;
}

bool agree_on_core(const FinitePartialInjection& f,
                   const FinitePartialInjection& g, const Natural& margin) {
    return !first_disagreement(f, g, margin).has_value();
}

}  // namespace arithmon
