#pragma once

#include "arithmon/natural.hpp"
#include "arithmon/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace arithmon {

/// All norms and distances are exact rationals; no floating point.
using PAdicValue = Rational;

/// Largest k with p^k dividing n. Requires n >= 1 and p prime.
Natural ord(const Natural& p, const Natural& n);

/// p^(-ord(p,n)) as an exact rational; 0 for n = 0.
PAdicValue norm(const Natural& p, const Natural& n);

/// norm of |b - a|; a non-Archimedean metric.
PAdicValue distance(const Natural& p, const Natural& a, const Natural& b);

/// The norm recovered from the divide-by-p^k generators: evaluate
/// R(p^k, 0) at n for every k where that is defined, take the least
/// value, divide by n. Must equal norm(p, n) for every n >= 1.
PAdicValue norm_via_polycyclic(const Natural& p, const Natural& n);

/// How a digit word read off a natural number is ordered.
enum class DigitOrder { msb_first, lsb_first };

/// A one-sided infinite digit sequence over {0..p-1}: a deterministic
/// total function from position to digit. Points built from a finite
/// word continue with zeros forever; arbitrary streams must declare
/// how far they may be inspected. Immutable after construction.
class CantorPoint {
public:
    /// The constant-zero stream.
    static CantorPoint constant_zero(const Natural& p);

    /// A finite digit word followed by the constant-zero tail.
    static CantorPoint from_word(const Natural& p,
                                 std::vector<std::uint32_t> prefix,
                                 DigitOrder order = DigitOrder::msb_first);

    /// An arbitrary deterministic stream, inspectable only for
    /// positions below the stated bound; digit() beyond it is a
    /// domain error rather than a wrong answer.
    static CantorPoint from_stream(const Natural& p,
                                   std::function<std::uint32_t(std::uint64_t)> fn,
                                   std::uint64_t inspection_bound);

    const Natural& prime() const { return p_; }
    DigitOrder order() const { return order_; }

    /// Digit at position i, validated to be < p.
    std::uint32_t digit(std::uint64_t i) const;

private:
    CantorPoint(Natural p, DigitOrder order);

    Natural p_;
    DigitOrder order_;
    std::vector<std::uint32_t> prefix_;  // zeros beyond, unless fn_ set
    std::function<std::uint32_t(std::uint64_t)> fn_;
    std::uint64_t bound_ = 0;
};

/// The digit sequence of a >= 1 in base p, zeros beyond; the digit
/// order used (most-significant-first by default) is recorded in the
/// resulting point.
CantorPoint cant(const Natural& p, const Natural& a,
                 DigitOrder order = DigitOrder::msb_first);

/// Minimum of value/n over all prefixes w of the stream at which the
/// divide-and-check map R(p^len(w), num(w)) is defined at n (the empty
/// prefix always is, contributing 1). Only the first floor(log_p n)+1
/// digits are ever inspected; requires n >= 1.
PAdicValue eval_gamma(const CantorPoint& gamma, const Natural& n);

}  // namespace arithmon
