#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "xyz/bits.hpp"
#include "xyz/linalg.hpp"
#include "xyz/tensor3.hpp"

namespace xyz {

/// i^phase * X^x Z^z on n qubits.
///
/// Operators are stored in XZ order with Y = iXZ, so a Hermitian letter string with
/// sign +1 carries phase == (number of Y letters) mod 4. Single-qubit products:
///
///     X*Y = +iZ   Y*Z = +iX   Z*X = +iY
///     Y*X = -iZ   Z*Y = -iX   X*Z = -iY
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x_(n), z_(n) {}
    PauliOperator(BitVector x, BitVector z, std::uint8_t phase);

    /// Letters from "IXYZ" (also '_' for identity), optional leading '+' or '-'.
    static PauliOperator from_string(const std::string& s);
    /// Hermitian operator with the given letter on each site and overall sign.
    static PauliOperator from_letters(const std::vector<char>& letters, int sign = +1);

    std::size_t n() const { return x_.size(); }
    const BitVector& x() const { return x_; }
    const BitVector& z() const { return z_; }
    std::uint8_t phase() const { return phase_; }
    char letter(std::size_t q) const;
    void set_letter(std::size_t q, char letter);  // keeps the operator Hermitian with unchanged sign

    std::size_t weight() const { return (x_ | z_).popcount(); }
    std::vector<std::size_t> support() const { return (x_ | z_).support(); }
    bool is_identity_support() const { return x_.none() && z_.none(); }
    bool is_hermitian() const;
    /// +1 or -1 for Hermitian operators; input error otherwise.
    int sign() const;
    PauliOperator negated() const { return PauliOperator(x_, z_, static_cast<std::uint8_t>((phase_ + 2) & 3)); }
    /// Same support and letters, sign +1.
    PauliOperator hermitian_positive() const;

    /// Symplectic row [x | z].
    BitVector symplectic() const { return x_.concat(z_); }

    bool operator==(const PauliOperator& o) const = default;
    std::string to_string() const;

   private:
    BitVector x_, z_;
    std::uint8_t phase_ = 0;
};

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
/// 0 when p and q commute, 1 when they anticommute.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);
inline bool commutes(const PauliOperator& p, const PauliOperator& q) { return symplectic_product(p, q) == 0; }

enum class Membership { in_group, in_group_up_to_phase, not_in_group };

struct MembershipResult {
    Membership verdict = Membership::not_in_group;
    /// For in_group_up_to_phase: p == i^phase_offset * (group element).
    std::uint8_t phase_offset = 0;
    /// Generators whose product matches p's support, when one exists.
    BitVector combination;
};

/// Stabilizer-style group given by generators. The GF(2) span of the symplectic rows
/// is built on first use and then only read, so one group can be shared by threads.
class PauliGroup {
   public:
    PauliGroup() = default;
    explicit PauliGroup(std::vector<PauliOperator> generators, bool check_commuting = false);

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

    BitMatrix symplectic_matrix() const;
    std::size_t rank() const;
    bool all_commute() const;

    /// Ordered product of the generators selected by `combination`.
    PauliOperator product(const BitVector& combination) const;
    /// With respect_phase, the phase is that of one matching product; it is only
    /// meaningful when the group does not contain -1 (see minus_one_in_group).
    MembershipResult contains(const PauliOperator& p, bool respect_phase) const;

   private:
    const SpanTracker& span() const;

    std::size_t n_ = 0;
    std::vector<PauliOperator> gens_;
    struct Cache {
        std::once_flag once;
        std::unique_ptr<SpanTracker> span;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

MembershipResult group_contains(const PauliGroup& g, const PauliOperator& p, bool respect_phase);

/// True iff some product of generators equals -1. Checks every relation in a kernel
/// basis and 200 random relations; inconsistent phases raise InternalError.
bool minus_one_in_group(const PauliGroup& g, std::uint64_t seed = 0);

struct SignFixing {
    std::vector<PauliOperator> independent;  // Hermitian, sign +1
    std::vector<std::size_t> chosen;         // indices into the original generators
    std::vector<int> sign_table;             // original g_i lies in the new group with this sign
};

/// Independent generating set with positive signs, plus the sign each original
/// generator picks up inside the group it generates.
SignFixing fix_signs(const PauliGroup& g);

/// Pauli weight of sigma1^ax sigma2^ay sigma3^az (exponent tensors of equal shape):
/// (|ax+ay| + |ax+az| + |ay+az|) / 2.
std::size_t pauli_weight_identity(const Tensor3& ax, const Tensor3& ay, const Tensor3& az);

}  // namespace xyz
