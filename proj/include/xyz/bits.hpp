#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace xyz {

/// Packed bit vector over GF(2).
///
/// Bit i lives in word i / 64 at position i % 64. Bits past size() are kept zero
/// so that popcount, equality and hashing never see garbage.
class BitVector {
   public:
    static constexpr std::size_t W = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + W - 1) / W, 0) {}

    static BitVector from_string(const std::string& s);  // "0110", ignores nothing else
    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i);
        return v;
    }

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return w_.size(); }
    const std::uint64_t* words() const { return w_.data(); }
    std::uint64_t* words() { return w_.data(); }

    bool get(std::size_t i) const { return (w_[i / W] >> (i % W)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t m = std::uint64_t{1} << (i % W);
        if (v)
            w_[i / W] |= m;
        else
            w_[i / W] &= ~m;
    }
    void flip(std::size_t i) { w_[i / W] ^= std::uint64_t{1} << (i % W); }

    BitVector& operator^=(const BitVector& o);
    BitVector& operator&=(const BitVector& o);
    BitVector& operator|=(const BitVector& o);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    bool operator==(const BitVector& o) const = default;
    /// Lexicographic on bit index 0 first; gives a total order for determinism.
    bool lex_less(const BitVector& o) const;

    std::size_t popcount() const;
    bool any() const;
    bool none() const { return !any(); }
    /// Parity of the bitwise AND; the GF(2) inner product.
    bool dot(const BitVector& o) const;
    /// Index of the lowest set bit, or size() when empty.
    std::size_t first_set() const;
    /// Lowest set bit at or after i, or size().
    std::size_t next_set(std::size_t i) const;
    std::vector<std::size_t> support() const;

    /// Bits [begin, begin+len) as a fresh vector.
    BitVector slice(std::size_t begin, std::size_t len) const;
    /// Concatenation [this | o].
    BitVector concat(const BitVector& o) const;
    void resize(std::size_t n);

    std::string to_string() const;

   private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense bit-packed matrix over GF(2); row i is a BitVector of length cols().
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
    void flip(std::size_t i, std::size_t j) { rows_[i].flip(j); }
    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    BitVector column(std::size_t j) const;

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& o) const;
    BitVector operator*(const BitVector& v) const;
    BitMatrix& operator+=(const BitMatrix& o);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix& b) { return a += b; }
    bool operator==(const BitMatrix& o) const = default;

    /// Rows of o appended below.
    BitMatrix vstack(const BitMatrix& o) const;
    /// Columns of o appended on the right.
    BitMatrix hstack(const BitMatrix& o) const;
    /// Rows permuted by pr (new row i = old row pr[i]) and columns by pc (new col j = old col pc[j]).
    BitMatrix permuted(const std::vector<std::size_t>& pr, const std::vector<std::size_t>& pc) const;
    BitMatrix pow(std::size_t e) const;

    std::size_t count_ones() const;
    std::size_t max_row_weight() const;
    std::size_t max_col_weight() const;
    bool is_symmetric() const { return *this == transpose(); }

    std::string to_string() const;

   private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace xyz
