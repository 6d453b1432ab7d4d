#pragma once

#include "arithmon/arith.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arithmon {

/// A finite word over the alphabet {0..k-1}, k >= 2. Digits are stored
/// most significant first, matching the numeric reading num below.
class Word {
public:
    explicit Word(std::uint32_t k);
    Word(std::uint32_t k, std::vector<std::uint32_t> digits);

    std::uint32_t k() const { return k_; }
    std::size_t len() const { return digits_.size(); }
    bool empty() const { return digits_.empty(); }
    const std::vector<std::uint32_t>& digits() const { return digits_; }

    /// Digits as text: one character for digits 0-9, "[d]" beyond.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Word& w);

private:
    std::uint32_t k_;
    std::vector<std::uint32_t> digits_;
};

Word concat(const Word& l, const Word& r);

/// Positional value of the word: num(ε) = 0, num(wx) = k·num(w) + x.
/// Always below k^len(w).
Natural num(const Word& w);

/// If w = r·v for some word r (v is a suffix of w), returns r.
std::optional<Word> left_complement(const Word& w, const Word& v);

/// An element of the k-generator polycyclic monoid in word-pair normal
/// form: zero, or a pair (up, down) acting on the least-significant end
/// of a number's digit word: strip down as a suffix, then append up in
/// its place. The pair of empty words is the identity; the zero element
/// is a distinct variant, not a pair.
class PolyElement {
public:
    static PolyElement zero(std::uint32_t k);
    static PolyElement identity(std::uint32_t k);
    static PolyElement pair(Word up, Word down);
    /// The x-th generator, the pair (ε, "x").
    static PolyElement generator(std::uint32_t k, std::uint32_t x);

    std::uint32_t k() const { return k_; }
    bool is_zero() const { return zero_; }
    bool is_identity() const { return !zero_ && up_.empty() && down_.empty(); }

    /// Word accessors throw on the zero element.
    const Word& up() const;
    const Word& down() const;

    /// `zero` or `P(k;"up","down")`, as accepted by the expression parser.
    std::string str() const;

    friend bool operator==(const PolyElement&, const PolyElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const PolyElement& e);

private:
    PolyElement(std::uint32_t k, bool zero, Word up, Word down);

    std::uint32_t k_;
    bool zero_;
    Word up_;
    Word down_;
};

/// Word-pair composition by suffix cancellation, rhs applied first:
/// (x,w)(v,u) is (x, r·u) when w = r·v, (s·x, u) when v = s·w, and
/// zero when neither inner word is a suffix of the other.
PolyElement poly_compose(const PolyElement& lhs, const PolyElement& rhs);

/// Generalized inverse: swap up and down.
PolyElement poly_dagger(const PolyElement& e);

/// Embedding into the congruence-class monoid: (v,u) becomes the
/// normal form with dom = k^len(u) N + num(u), img = k^len(v) N + num(v).
/// The k argument must match the element's alphabet.
ArithElement theta(const Natural& k, const PolyElement& e);

/// A word condensed to (length, value): the pair (m, n) with n < k^m.
/// The identity (empty word) is canonically (0, 0) — the only valid
/// pair with first component zero, so no separate variant is needed.
struct KBNElement {
    KBNElement() : m(0), n(0) {}
    KBNElement(Natural m_, Natural n_);

    Natural m;  // word length
    Natural n;  // word value, n < k^m for the ambient base k

    static KBNElement identity() { return {}; }
    bool is_identity() const { return m.is_zero(); }

    std::string str() const { return "(" + m.str() + "," + n.str() + ")"; }
    friend bool operator==(const KBNElement&, const KBNElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const KBNElement& e);
};

/// Does (m, n) satisfy the defining bound n < k^m?
bool kbn_valid(const Natural& k, const KBNElement& e);

/// Concatenation in condensed form: (d,c)·(b,a) = (d+b, k^b·c + a) —
/// lengths add, and the left value is shifted past the right word.
KBNElement kbn_compose(const Natural& k, const KBNElement& lhs,
                       const KBNElement& rhs);

/// Condense a word to (len, num); a monoid isomorphism onto valid pairs.
KBNElement mu(const Word& w);

/// Inverse of mu: the unique word of length m with value n.
Word mu_inverse(std::uint32_t k, const KBNElement& e);

/// (y,x) is a residue of (b,a) when y <= b and a ≡ x (mod k^y) — the
/// condensed form of "the word of (y,x) is a suffix of the word of (b,a)".
bool k_residue(const Natural& k, const KBNElement& big, const KBNElement& small);

/// Strip a residue off the right: the unique q with q·(y,x) = (b,a),
/// namely (b−y, (a−x)/k^y). Requires k_residue(k, big, small).
KBNElement kbn_cancel(const Natural& k, const KBNElement& big,
                      const KBNElement& small);

/// Composition of two theta-images computed entirely in condensed
/// arithmetic (residue test, cancel, compose) rather than CRT. Both
/// arguments must have all moduli powers of k; agrees with the generic
/// compose wherever defined.
ArithElement poly_compose_arith(const Natural& k, const ArithElement& lhs,
                                const ArithElement& rhs);

}  // namespace arithmon
