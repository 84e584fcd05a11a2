#pragma once

#include <optional>
#include <string>

#include "xyz/bits.hpp"
#include "xyz/code.hpp"

namespace xyz {

struct DimensionReport {
    std::size_t k_bruteforce = 0;
    /// Relation count from the kernel of the relation system (small codes only).
    std::optional<std::size_t> r;
    /// Solutions of H1H1^T X = H2H2^T X = H3H3^T X (gcd route).
    std::optional<std::size_t> s;
    std::optional<long long> k_formula;
    std::optional<std::size_t> k1t, k2, k3;
    /// Index (0-based) playing the role of the unconstrained matrix in the formula.
    std::optional<int> free_index;
    /// (n1-m1)(n2-m2)(n3-m3); can be negative.
    long long base = 0;
    bool formula_applicable = false;
    bool relation_route_run = false;
    bool agreement = true;
    std::string note;
};

/// N minus the rank of the symplectic generator matrix.
std::size_t dimension_bruteforce(const XYZCode& code);

/// Independent solutions of (a x 1 x 1) X = (1 x b x 1) X = (1 x 1 x c) X, by kernel dimension.
std::size_t sylvester_count_direct(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c);
/// Same count as a sum of gcd degrees over the invariant factors of a, b and c.
std::size_t sylvester_count_gcd(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c);

/// All dimension routes with a cross-check. The relation-system route runs when the
/// generator count is at most `relation_limit`.
DimensionReport dimension_formula(const XYZCode& code, std::size_t relation_limit = 20000);

/// I + Omega_n with its last row removed, an (n-1) x n matrix.
BitMatrix modified_chamon_matrix(std::size_t n);

}  // namespace xyz
