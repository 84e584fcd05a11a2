#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xyz/bits.hpp"
#include "xyz/code.hpp"
#include "xyz/pauli.hpp"
#include "xyz/tensor3.hpp"

namespace xyz {

struct SearchConfig {
    std::size_t cap = 4;
    /// Search-tree nodes allowed across all workers before giving up.
    std::uint64_t budget = 2'000'000'000ULL;
    /// 0 picks the hardware concurrency.
    unsigned workers = 0;
    /// Letters that may appear, bit 0 = X, bit 1 = Y, bit 2 = Z.
    unsigned letters = 7;
};

struct SearchResult {
    std::optional<std::size_t> exact_d;
    std::optional<PauliOperator> best;
    /// Every operator of weight <= exhausted_weight was examined.
    std::size_t exhausted_weight = 0;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
};

/// Lowest-weight operator that commutes with every generator of g but is not in g.
///
/// Candidates are grown one qubit at a time, always adding a qubit that flips the
/// lowest unsatisfied check. A minimum-weight logical cannot split into two
/// commuting pieces, so every one of them is reached; among those found at the
/// minimum weight the first in (support, then letters X<Y<Z) order is returned,
/// independently of the worker count.
SearchResult find_min_logical(const PauliGroup& g, const SearchConfig& cfg);

struct DistanceReport {
    std::optional<std::size_t> exact_d;
    std::size_t cap = 0;
    std::optional<PauliOperator> best_logical_found;
    std::optional<double> dstar;
    std::optional<bool> sandwich_ok;
    std::size_t lower_bound = 1;
    std::size_t upper_bound = 0;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;
};

DistanceReport distance_capped(const XYZCode& code, const SearchConfig& cfg);

struct RepresentativeBound {
    std::size_t bound = 0;
    /// Translated representatives per family (2 n_l each).
    std::array<std::vector<PauliOperator>, 3> representatives;
};

/// Builds all translated slice representatives, checks them, and returns 2 min n_l.
RepresentativeBound disjoint_representative_bound(const XYZCode& code);

/// A zero-syndrome operator anticommuting with op, or nullopt when op commutes with
/// every such operator (i.e. op is in the group up to phase).
std::optional<PauliOperator> logical_partner(const PauliGroup& g, const PauliOperator& op);

/// Z on cells (i,i,0) of blocks A and B of build(h, h, h3).
PauliOperator equal_pair_logical(const BitMatrix& h, const BitMatrix& h3);

struct DStarReport {
    /// Objective values (doubled, so they are integers) per index permutation, in
    /// the order (012),(021),(102),(120),(201),(210).
    std::array<std::size_t, 6> doubled{};
    std::array<std::array<int, 3>, 6> perms{};
    std::size_t best_doubled = 0;
    int best_perm = 0;
    Tensor3 witness;  // shape (n_i, n_j, n_k) for the best permutation
    std::size_t w = 0;
    bool exact = false;
    std::uint64_t seed = 0;
    double value() const { return best_doubled / 2.0; }
};

enum class DStarStrategy { exhaustive, greedy };

/// Decoupled objective |(Hi^2+Hk^2)M+R| + |(Hj^2+Hk^2)M+R| + |(Hi^2+Hj^2)M|/2,
/// doubled, for M of shape (n_i, n_j, n_k) and R the k = 0 plane.
std::size_t dstar_objective_doubled(const BitMatrix& hi, const BitMatrix& hj, const BitMatrix& hk, const Tensor3& m);

/// Minimum of the decoupled objective. Exhaustive needs n1 n2 n3 <= 24; greedy is
/// single-bit-flip descent with `restarts` seeded restarts and gives an upper bound.
DStarReport dstar(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3, DStarStrategy strategy,
                  std::uint64_t budget = 1'000'000'000ULL, std::uint64_t seed = 0, int restarts = 32);

/// d*/w <= d <= (3/2) w d*, in doubled integers.
bool sandwich_holds(std::size_t d, std::size_t dstar_doubled, std::size_t w);

struct TightnessResult {
    PauliOperator op;
    std::size_t weight = 0;
    /// w (3|(x^2+y^2)M| + 3|(x^2+z^2)M+R| + |(y^2+z^2)M+R|), i.e. twice the bound.
    std::size_t bound_doubled = 0;
    std::size_t c_block_weight = 0;
};

/// Z-logical from stabilizer coefficients (xyM, x^2 M, yzM, xzM) times the A,B slices.
TightnessResult tightness_logical(const XYZCode& code, const Tensor3& m);

struct Permutations {
    std::array<std::vector<std::size_t>, 3> rows, cols;
};

/// (H_l with rows permuted by perms.rows[l] and columns by perms.cols[l]).
std::array<BitMatrix, 3> permute_matrices(const std::array<BitMatrix, 3>& h, const Permutations& p);
/// Image in the permuted code of an operator of the original code (same letters, relabeled cells).
PauliOperator permute_operator(const XYZCode& original, const XYZCode& permuted, const Permutations& p,
                               const PauliOperator& op);
/// Capped-search minima of the two codes coincide.
bool permutation_invariance_check(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3,
                                  const Permutations& p, const SearchConfig& cfg);

struct NonExpandingError {
    BitMatrix p, q;        // P (n1 x n2), Q (m1 x m2)
    BitMatrix s, t;        // S = H1 P + Q H2, T = P H2^T + H1^T Q
    BitMatrix t_closed;    // H1^T (X (H2H2^T)^k + (H1H1^T)^k X)
};

NonExpandingError nonexpanding_error(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& x, std::size_t k);

}  // namespace xyz
