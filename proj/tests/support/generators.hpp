#pragma once

// Deterministic random-value builders shared by the property suites.
// Every suite seeds its own engine, so failures replay exactly.

#include "arithmon/arith.hpp"
#include "arithmon/classical.hpp"
#include "arithmon/polycyclic.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testsup {

using arithmon::ArithElement;
using arithmon::BicyclicElement;
using arithmon::CongruenceClass;
using arithmon::LeechElement;
using arithmon::Natural;
using arithmon::PolyElement;
using arithmon::Word;

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline CongruenceClass random_class(Rng& rng, std::uint64_t max_modulus) {
    std::uint64_t m = pick(rng, 1, max_modulus);
    return CongruenceClass(m, pick(rng, 0, m - 1));
}

/// Mostly proper normal forms, with the identity and zero sprinkled in.
inline ArithElement random_element(Rng& rng, std::uint64_t max_modulus) {
    std::uint64_t roll = pick(rng, 0, 19);
    if (roll == 0) return ArithElement::zero();
    if (roll == 1) return ArithElement::identity();
    return ArithElement::normal_form(random_class(rng, max_modulus),
                                     random_class(rng, max_modulus));
}

inline ArithElement random_nonzero(Rng& rng, std::uint64_t max_modulus) {
    return ArithElement::normal_form(random_class(rng, max_modulus),
                                     random_class(rng, max_modulus));
}

inline ArithElement random_idempotent(Rng& rng, std::uint64_t max_modulus) {
    if (pick(rng, 0, 9) == 0) return ArithElement::zero();
    CongruenceClass c = random_class(rng, max_modulus);
    return ArithElement::normal_form(c, c);
}

inline BicyclicElement random_bicyclic(Rng& rng, std::uint64_t max) {
    return {Natural(pick(rng, 0, max)), Natural(pick(rng, 0, max))};
}

inline LeechElement random_leech(Rng& rng, std::uint64_t max) {
    return LeechElement(Natural(pick(rng, 1, max)), Natural(pick(rng, 1, max)));
}

inline Word random_word(Rng& rng, std::uint32_t k, std::size_t max_len) {
    std::size_t len = pick(rng, 0, max_len);
    std::vector<std::uint32_t> digits(len);
    for (auto& d : digits) d = static_cast<std::uint32_t>(pick(rng, 0, k - 1));
    return Word(k, std::move(digits));
}

/// Word pairs, with occasional zero and identity.
inline PolyElement random_poly(Rng& rng, std::uint32_t k, std::size_t max_len) {
    std::uint64_t roll = pick(rng, 0, 19);
    if (roll == 0) return PolyElement::zero(k);
    if (roll == 1) return PolyElement::identity(k);
    return PolyElement::pair(random_word(rng, k, max_len),
                             random_word(rng, k, max_len));
}

inline std::vector<std::pair<Natural, Natural>>
random_chain(Rng& rng, std::size_t max_len, std::uint64_t max_base) {
    std::size_t len = pick(rng, 1, max_len);
    std::vector<std::pair<Natural, Natural>> chain;
    chain.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t a = pick(rng, 1, max_base);
        chain.emplace_back(Natural(a), Natural(pick(rng, 0, a - 1)));
    }
    return chain;
}

/// Expression strings exercising the grammar the way users would.
inline std::string random_expression(Rng& rng, std::uint64_t max_modulus) {
    auto gen = [&] {
        std::uint64_t a = pick(rng, 1, max_modulus);
        return "R(" + std::to_string(a) + "," + std::to_string(pick(rng, 0, a - 1)) +
               ")";
    };
    auto atom = [&]() -> std::string {
        switch (pick(rng, 0, 4)) {
            case 0: return gen();
            case 1: return "dag(" + gen() + ")";
            case 2: return "id";
            case 3: {
                std::uint64_t c = pick(rng, 1, max_modulus);
                return "R‡(" + std::to_string(c) + "," +
                       std::to_string(pick(rng, 0, c - 1)) + ")";
            }
            default:
                return "[" + std::to_string(pick(rng, 1, 6)) + "," +
                       std::to_string(pick(rng, 1, 6)) + "]*";
        }
    };
    std::uint64_t n = pick(rng, 1, 4);
    std::string s = atom();
    for (std::uint64_t i = 1; i < n; ++i) s += "*" + atom();
    if (pick(rng, 0, 3) == 0) s = "dag(" + s + ")";
    return s;
}

}  // namespace testsup
