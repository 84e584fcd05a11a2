#include "xyz/linalg.hpp"

#include <utility>

#include "xyz/errors.hpp"

namespace xyz {

RowEchelon rref(BitMatrix m) {
    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r) std::swap(m.row(p), m.row(r));
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.row(i) ^= m.row(r);
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const BitMatrix& input) {
    // Forward elimination only; word-level row operations restricted to the tail.
    BitMatrix m = input;
    std::size_t r = 0;
    const std::size_t words = m.cols() == 0 ? 0 : m.row(0).num_words();
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r) std::swap(m.row(p), m.row(r));
        const std::size_t w0 = c / BitVector::W;
        const std::uint64_t* src = m.row(r).words();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (!m.get(i, c)) continue;
            std::uint64_t* dst = m.row(i).words();
            for (std::size_t w = w0; w < words; ++w) dst[w] ^= src[w];
        }
        ++r;
    }
    return r;
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < e.rank; ++i)
            if (e.reduced.get(i, f)) v.set(e.pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) throw InputError("solve: right-hand side length must equal row count");
    BitMatrix aug(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (b.get(i)) aug.set(i, 0);
    RowEchelon e = rref(m.hstack(aug));
    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.rank; ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt;
        if (e.reduced.get(i, m.cols())) x.set(e.pivots[i]);
    }
    return x;
}

SpanTracker::SpanTracker(std::size_t width, std::size_t max_items) : width_(width), items_(max_items) {}

bool SpanTracker::insert(const BitVector& v, std::size_t tag) {
    if (v.size() != width_) throw InputError("SpanTracker: width mismatch");
    if (tag >= items_) throw InputError("SpanTracker: tag out of range");
    BitVector r = v;
    BitVector c(items_);
    c.set(tag);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            c ^= combos_[i];
        }
    }
    std::size_t p = r.first_set();
    if (p == width_) return false;
    // Keep existing rows reduced at the new pivot so express() is a single pass.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].get(p)) {
            rows_[i] ^= r;
            combos_[i] ^= c;
        }
    }
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(c));
    pivots_.push_back(p);
    return true;
}

bool SpanTracker::express(const BitVector& v, BitVector* combo) const {
    if (v.size() != width_) throw InputError("SpanTracker: width mismatch");
    BitVector r = v;
    BitVector c(items_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            c ^= combos_[i];
        }
    }
    if (r.any()) return false;
    if (combo) *combo = std::move(c);
    return true;
}

}  // namespace xyz
