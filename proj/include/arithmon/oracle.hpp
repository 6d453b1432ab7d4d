#pragma once

#include "arithmon/arith.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace arithmon {

/// A partial injection tabulated on the window {0..N}. Images may
/// exceed N (they are stored exactly); domain points beyond N do not
/// exist in the table.
///
/// A table entry can additionally be marked "clipped": the underlying
/// map may be defined there, but the value was lost to window
/// truncation (e.g. an intermediate value of a composition escaped the
/// window). Comparisons skip clipped points; everything else in a
/// table is exact.
class FinitePartialInjection {
public:
    explicit FinitePartialInjection(const Natural& window);

    static FinitePartialInjection identity(const Natural& window);

    std::uint64_t window() const { return images_.size() - 1; }

    /// Records n |-> v. Rejects duplicate images (the table stays injective).
    void set(std::uint64_t n, Natural v);

    /// Marks n as truncated: possibly defined, value unknown.
    void mark_clipped(std::uint64_t n);

    std::optional<Natural> at(std::uint64_t n) const { return images_.at(n); }
    bool clipped(std::uint64_t n) const { return clipped_.at(n); }
    bool has_clipped_points() const { return any_clipped_; }

    /// Number of (non-clipped) defined points.
    std::size_t size() const;

private:
    std::vector<std::optional<Natural>> images_;
    std::vector<bool> clipped_;
    std::set<Natural> used_images_;
    bool any_clipped_ = false;
};

/// Tabulates e pointwise over {0..N}. Nothing is clipped: the symbolic
/// element is fully known, and images beyond N are kept.
FinitePartialInjection from_arith(const ArithElement& e, const Natural& window);

/// Pointwise composition, g first. Points where g's value escapes the
/// window (or is itself clipped) come out clipped, not undefined.
FinitePartialInjection oracle_compose(const FinitePartialInjection& f,
                                      const FinitePartialInjection& g);

/// Relational converse, keeping only pairs whose image fits the window.
/// Refuses tables with clipped points: their converses would have
/// unknown gaps at unknown positions.
FinitePartialInjection oracle_dagger(const FinitePartialInjection& f);

/// True when the two tables tell the same story away from the window
/// edge: on domain points n <= N - margin, skipping points either side
/// marks clipped, the tables must agree wherever both images are
/// <= N - margin; a point whose image escapes that core on either side
/// is excluded as truncation noise.
bool agree_on_core(const FinitePartialInjection& f,
                   const FinitePartialInjection& g, const Natural& margin);

/// Witness-reporting variant of agree_on_core: the smallest genuinely
/// disagreeing domain point, or disengaged when the tables agree.
std::optional<std::uint64_t> first_disagreement(const FinitePartialInjection& f,
                                                const FinitePartialInjection& g,
                                                const Natural& margin);

}  // namespace arithmon
