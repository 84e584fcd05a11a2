#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xyz/bits.hpp"

namespace xyz {

/// Polynomial over GF(2). Coefficient of x^i is bit i; always normalized so the
/// top stored bit is set. The zero polynomial stores no bits and has degree -inf,
/// reported as an empty optional rather than a number.
class F2Polynomial {
   public:
    F2Polynomial() = default;
    explicit F2Polynomial(BitVector coeffs);
    static F2Polynomial from_exponents(const std::vector<std::size_t>& exps);
    static F2Polynomial monomial(std::size_t k) { return from_exponents({k}); }
    static F2Polynomial one() { return monomial(0); }
    static F2Polynomial x() { return monomial(1); }
    /// Parses "x^3+x+1", "1", "0".
    static F2Polynomial parse(const std::string& s);

    std::optional<std::size_t> degree() const;
    bool is_zero() const { return c_.size() == 0; }
    bool is_one() const { return c_.size() == 1; }
    bool coeff(std::size_t i) const { return i < c_.size() && c_.get(i); }
    const BitVector& coefficients() const { return c_; }

    F2Polynomial& operator+=(const F2Polynomial& o);
    friend F2Polynomial operator+(F2Polynomial a, const F2Polynomial& b) { return a += b; }
    F2Polynomial operator*(const F2Polynomial& o) const;
    /// Quotient and remainder; division by zero is an input error.
    std::pair<F2Polynomial, F2Polynomial> divmod(const F2Polynomial& d) const;
    F2Polynomial operator%(const F2Polynomial& d) const { return divmod(d).second; }
    F2Polynomial operator/(const F2Polynomial& d) const { return divmod(d).first; }
    F2Polynomial pow(std::size_t e) const;
    bool divides(const F2Polynomial& p) const { return !is_zero() && (p % *this).is_zero(); }
    bool operator==(const F2Polynomial& o) const { return c_ == o.c_; }

    std::string to_string() const;

   private:
    void normalize();
    BitVector c_;
};

/// Monic gcd by Euclid; gcd(0, q) = q.
F2Polynomial poly_gcd(F2Polynomial p, F2Polynomial q);

/// det(xI + m), exact over GF(2) (Hessenberg reduction).
F2Polynomial char_poly(const BitMatrix& m);

/// Nontrivial similarity invariants h1 | h2 | ... of m, from the Smith normal form
/// of xI + m over GF(2)[x]. Their product is char_poly(m).
std::vector<F2Polynomial> invariant_factors(const BitMatrix& m);

/// p_0 = 0, p_1 = 1, p_{n+1} = x p_n + p_{n-1}.
F2Polynomial fibonacci_polynomial(std::size_t n);

}  // namespace xyz
