#pragma once

#include <optional>
#include <vector>

#include "xyz/bits.hpp"

namespace xyz {

/// Reduced row echelon form; pivots[i] is the pivot column of row i (i < rank).
struct RowEchelon {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RowEchelon rref(BitMatrix m);
std::size_t rank(const BitMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in increasing free-column order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);
/// Some x with m x = b, or nullopt when the augmented rank grows.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// Row space built one vector at a time, remembering which inserted vectors make up
/// each basis row. Used for membership tests that must also report the combination.
class SpanTracker {
   public:
    SpanTracker(std::size_t width, std::size_t max_items);

    /// Inserts v as item `tag`; returns true when v was independent of earlier items.
    bool insert(const BitVector& v, std::size_t tag);
    /// Writes the combination of inserted items equal to v into combo, if v is in the span.
    bool express(const BitVector& v, BitVector* combo) const;
    std::size_t rank() const { return rows_.size(); }

   private:
    std::size_t width_, items_;
    std::vector<BitVector> rows_;
    std::vector<BitVector> combos_;
    std::vector<std::size_t> pivots_;
};

}  // namespace xyz
