#include "xyz/bits.hpp"

#include <algorithm>

#include "xyz/errors.hpp"

namespace xyz {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw InputError(std::string(what) + ": size mismatch " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

BitVector BitVector::from_string(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i);
        else if (s[i] != '0')
            throw InputError("bit string may only contain 0 and 1");
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& o) {
    require_same(n_, o.n_, "BitVector xor");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& o) {
    require_same(n_, o.n_, "BitVector and");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& o) {
    require_same(n_, o.n_, "BitVector or");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

bool BitVector::lex_less(const BitVector& o) const {
    require_same(n_, o.n_, "BitVector compare");
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t d = w_[i] ^ o.w_[i];
        if (d) {
            std::uint64_t low = d & (~d + 1);
            // The vector holding the lowest differing bit sorts first.
            return (w_[i] & low) != 0;
        }
    }
    return false;
}

std::size_t BitVector::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVector::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

bool BitVector::dot(const BitVector& o) const {
    require_same(n_, o.n_, "BitVector dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

std::size_t BitVector::first_set() const { return next_set(0); }

std::size_t BitVector::next_set(std::size_t i) const {
    if (i >= n_) return n_;
    std::size_t wi = i / W;
    std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (i % W));
    while (true) {
        if (cur) return wi * W + static_cast<std::size_t>(std::countr_zero(cur));
        if (++wi >= w_.size()) return n_;
        cur = w_[wi];
    }
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = first_set(); i < n_; i = next_set(i + 1)) out.push_back(i);
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t len) const {
    if (begin + len > n_) throw InputError("BitVector slice out of range");
    BitVector out(len);
    for (std::size_t i = next_set(begin); i < begin + len; i = next_set(i + 1)) out.set(i - begin);
    return out;
}

BitVector BitVector::concat(const BitVector& o) const {
    BitVector out(*this);
    out.resize(n_ + o.n_);
    for (std::size_t i = o.first_set(); i < o.n_; i = o.next_set(i + 1)) out.set(n_ + i);
    return out;
}

void BitVector::resize(std::size_t n) {
    n_ = n;
    w_.resize((n + W - 1) / W, 0);
    if (n % W) w_.back() &= (std::uint64_t{1} << (n % W)) - 1;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = first_set(); i < n_; i = next_set(i + 1)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("ragged matrix rows");
        m.rows_[i] = BitVector::from_string(rows[i]);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    BitMatrix m;
    m.r_ = rows.size();
    m.c_ = cols;
    for (auto& r : rows)
        if (r.size() != cols) throw InputError("row length does not match column count");
    m.rows_ = std::move(rows);
    return m;
}

BitVector BitMatrix::column(std::size_t j) const {
    BitVector v(r_);
    for (std::size_t i = 0; i < r_; ++i)
        if (get(i, j)) v.set(i);
    return v;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = rows_[i].first_set(); j < c_; j = rows_[i].next_set(j + 1)) t.set(j, i);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    require_same(c_, o.r_, "BitMatrix product");
    BitMatrix out(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = rows_[i].first_set(); k < c_; k = rows_[i].next_set(k + 1)) out.rows_[i] ^= o.rows_[k];
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const {
    require_same(c_, v.size(), "BitMatrix times vector");
    BitVector out(r_);
    for (std::size_t i = 0; i < r_; ++i)
        if (rows_[i].dot(v)) out.set(i);
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& o) {
    require_same(r_, o.r_, "BitMatrix sum rows");
    require_same(c_, o.c_, "BitMatrix sum cols");
    for (std::size_t i = 0; i < r_; ++i) rows_[i] ^= o.rows_[i];
    return *this;
}

BitMatrix BitMatrix::vstack(const BitMatrix& o) const {
    require_same(c_, o.c_, "vstack");
    BitMatrix out(*this);
    out.rows_.insert(out.rows_.end(), o.rows_.begin(), o.rows_.end());
    out.r_ += o.r_;
    return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& o) const {
    require_same(r_, o.r_, "hstack");
    BitMatrix out(r_, c_ + o.c_);
    for (std::size_t i = 0; i < r_; ++i) out.rows_[i] = rows_[i].concat(o.rows_[i]);
    return out;
}

BitMatrix BitMatrix::permuted(const std::vector<std::size_t>& pr, const std::vector<std::size_t>& pc) const {
    require_same(pr.size(), r_, "row permutation");
    require_same(pc.size(), c_, "column permutation");
    BitMatrix out(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (get(pr[i], pc[j])) out.set(i, j);
    return out;
}

BitMatrix BitMatrix::pow(std::size_t e) const {
    if (!square()) throw InputError("matrix power needs a square matrix");
    BitMatrix result = identity(r_), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::size_t BitMatrix::count_ones() const {
    std::size_t c = 0;
    for (auto& r : rows_) c += r.popcount();
    return c;
}

std::size_t BitMatrix::max_row_weight() const {
    std::size_t m = 0;
    for (auto& r : rows_) m = std::max(m, r.popcount());
    return m;
}

std::size_t BitMatrix::max_col_weight() const { return transpose().max_row_weight(); }

std::string BitMatrix::to_string() const {
    std::string s;
    for (auto& r : rows_) s += r.to_string() + "\n";
    return s;
}

}  // namespace xyz
