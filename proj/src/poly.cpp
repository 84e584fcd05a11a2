#include "xyz/poly.hpp"

#include <algorithm>
#include <cstdint>

#include "xyz/errors.hpp"

namespace xyz {

F2Polynomial::F2Polynomial(BitVector coeffs) : c_(std::move(coeffs)) { normalize(); }

void F2Polynomial::normalize() {
    std::size_t top = c_.size();
    while (top > 0 && !c_.get(top - 1)) --top;
    if (top != c_.size()) c_.resize(top);
}

F2Polynomial F2Polynomial::from_exponents(const std::vector<std::size_t>& exps) {
    std::size_t top = 0;
    for (auto e : exps) top = std::max(top, e + 1);
    BitVector c(top);
    for (auto e : exps) c.flip(e);
    return F2Polynomial(std::move(c));
}

F2Polynomial F2Polynomial::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw InputError("empty polynomial");
    if (s == "0") return F2Polynomial();
    std::vector<std::size_t> exps;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(pos, end - pos);
        if (term == "1") {
            exps.push_back(0);
        } else if (term == "x") {
            exps.push_back(1);
        } else if (term.size() > 2 && term.compare(0, 2, "x^") == 0 &&
                   std::all_of(term.begin() + 2, term.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            exps.push_back(std::stoul(term.substr(2)));
        } else {
            throw InputError("bad polynomial term '" + term + "'");
        }
        pos = end + 1;
    }
    return from_exponents(exps);
}

std::optional<std::size_t> F2Polynomial::degree() const {
    if (is_zero()) return std::nullopt;
    return c_.size() - 1;
}

F2Polynomial& F2Polynomial::operator+=(const F2Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    BitVector other = o.c_;
    other.resize(c_.size());
    c_ ^= other;
    normalize();
    return *this;
}

F2Polynomial F2Polynomial::operator*(const F2Polynomial& o) const {
    if (is_zero() || o.is_zero()) return F2Polynomial();
    BitVector out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = c_.first_set(); i < c_.size(); i = c_.next_set(i + 1))
        for (std::size_t j = o.c_.first_set(); j < o.c_.size(); j = o.c_.next_set(j + 1)) out.flip(i + j);
    return F2Polynomial(std::move(out));
}

std::pair<F2Polynomial, F2Polynomial> F2Polynomial::divmod(const F2Polynomial& d) const {
    if (d.is_zero()) throw InputError("polynomial division by zero");
    BitVector r = c_;
    const std::size_t dd = d.c_.size() - 1;
    if (r.size() < d.c_.size()) return {F2Polynomial(), *this};
    BitVector q(r.size() - dd);
    for (std::size_t top = r.size(); top-- > dd;) {
        if (!r.get(top)) continue;
        std::size_t shift = top - dd;
        q.set(shift);
        for (std::size_t j = d.c_.first_set(); j < d.c_.size(); j = d.c_.next_set(j + 1)) r.flip(j + shift);
    }
    return {F2Polynomial(std::move(q)), F2Polynomial(std::move(r))};
}

F2Polynomial F2Polynomial::pow(std::size_t e) const {
    F2Polynomial result = one(), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::string F2Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (!c_.get(i)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

F2Polynomial poly_gcd(F2Polynomial p, F2Polynomial q) {
    while (!q.is_zero()) {
        F2Polynomial r = p % q;
        p = std::move(q);
        q = std::move(r);
    }
    return p;  // every nonzero GF(2) polynomial is already monic
}

F2Polynomial char_poly(const BitMatrix& m) {
    if (!m.square()) throw InputError("char_poly: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<std::vector<std::uint8_t>> h(n, std::vector<std::uint8_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = m.get(i, j);

    // Similarity transforms down to upper Hessenberg form.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t p = k + 1;
        while (p < n && !h[p][k]) ++p;
        if (p == n) continue;
        if (p != k + 1) {
            std::swap(h[p], h[k + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][p], h[i][k + 1]);
        }
        for (std::size_t i = k + 2; i < n; ++i) {
            if (!h[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) h[i][j] ^= h[k + 1][j];
            for (std::size_t r = 0; r < n; ++r) h[r][k + 1] ^= h[r][i];
        }
    }

    // Expansion along the last column of each leading block (signs vanish mod 2).
    std::vector<F2Polynomial> p(n + 1);
    p[0] = F2Polynomial::one();
    for (std::size_t k = 1; k <= n; ++k) {
        F2Polynomial diag = F2Polynomial::x();
        if (h[k - 1][k - 1]) diag += F2Polynomial::one();
        F2Polynomial acc = diag * p[k - 1];
        bool chain = true;
        for (std::size_t i = 1; i < k && chain; ++i) {
            chain = h[k - i][k - i - 1] != 0;
            if (chain && h[k - i - 1][k - 1]) acc += p[k - i - 1];
        }
        p[k] = std::move(acc);
    }
    return p[n];
}

std::vector<F2Polynomial> invariant_factors(const BitMatrix& m) {
    if (!m.square()) throw InputError("invariant_factors: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<std::vector<F2Polynomial>> a(n, std::vector<F2Polynomial>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m.get(i, j)) a[i][j] = F2Polynomial::one();
            if (i == j) a[i][j] += F2Polynomial::x();
        }

    auto row_axpy = [&](std::size_t dst, std::size_t src, const F2Polynomial& q) {
        for (std::size_t j = 0; j < n; ++j)
            if (!a[src][j].is_zero()) a[dst][j] += q * a[src][j];
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const F2Polynomial& q) {
        for (std::size_t i = 0; i < n; ++i)
            if (!a[i][src].is_zero()) a[i][dst] += q * a[i][src];
    };

    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            // Smallest-degree nonzero entry of the trailing block becomes the pivot.
            std::size_t bi = n, bj = n, bd = 0;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    auto d = a[i][j].degree();
                    if (d && (bi == n || *d < bd)) {
                        bi = i;
                        bj = j;
                        bd = *d;
                    }
                }
            if (bi == n) break;  // trailing block is zero (cannot happen: det != 0)
            std::swap(a[bi], a[k]);
            for (std::size_t i = 0; i < n; ++i) std::swap(a[i][bj], a[i][k]);

            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                auto [q, r] = a[i][k].divmod(a[k][k]);
                row_axpy(i, k, q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[k][j].is_zero()) continue;
                auto [q, r] = a[k][j].divmod(a[k][k]);
                col_axpy(j, k, q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            bool divides_rest = true;
            for (std::size_t i = k + 1; i < n && divides_rest; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!(a[i][j] % a[k][k]).is_zero()) {
                        row_axpy(k, i, F2Polynomial::one());
                        divides_rest = false;
                        break;
                    }
            if (divides_rest) break;
        }
    }

    std::vector<F2Polynomial> out;
    for (std::size_t k = 0; k < n; ++k)
        if (!a[k][k].is_zero() && !a[k][k].is_one()) out.push_back(a[k][k]);
    return out;
}

F2Polynomial fibonacci_polynomial(std::size_t n) {
    F2Polynomial prev, cur = F2Polynomial::one();
    if (n == 0) return prev;
    for (std::size_t i = 1; i < n; ++i) {
        F2Polynomial next = F2Polynomial::x() * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace xyz
