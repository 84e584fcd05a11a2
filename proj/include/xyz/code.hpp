#pragma once

#include <array>
#include <string>
#include <vector>

#include "xyz/bits.hpp"
#include "xyz/pauli.hpp"
#include "xyz/tensor3.hpp"

namespace xyz {

/// Qubit blocks A..D and check blocks S..V.
enum class Block { A = 0, B = 1, C = 2, D = 3 };
enum class Check { S = 0, T = 1, U = 2, V = 3 };

const char* block_name(Block b);
const char* check_name(Check c);

/// Per-block Pauli content as exponent tensors of sigma1, sigma2, sigma3.
struct BlockPaulis {
    std::array<Tensor3, 3> part;  // [0]=X exponents, [1]=Y, [2]=Z
};

/// Check tensors (S, T, U, V); used both for syndromes and for stabilizer coefficients.
struct CheckTensors {
    std::array<Tensor3, 4> t;
    const Tensor3& operator[](Check c) const { return t[static_cast<int>(c)]; }
    Tensor3& operator[](Check c) { return t[static_cast<int>(c)]; }
    std::size_t weight() const { return t[0].weight() + t[1].weight() + t[2].weight() + t[3].weight(); }
    bool is_zero() const { return weight() == 0; }
};

/// One term of a generator: check type `check` acts on `block` with Pauli `letter`
/// (0=X, 1=Y, 2=Z) through matrix H_{matrix+1} (transposed when `transposed`) on `axis`.
struct GeneratorAction {
    Check check;
    Block block;
    int letter;
    int matrix;
    bool transposed;
};

/// The twelve actions of the generator matrix; each check touches three blocks.
const std::array<GeneratorAction, 12>& generator_actions();

struct QubitLocation {
    Block block;
    std::size_t i, j, k;
};

/// XYZ product code of three parity-check matrices H_l (m_l x n_l).
///
/// Shapes: A = (n1,n2,n3), B = (m1,m2,n3), C = (m1,n2,m3), D = (n1,m2,m3);
/// checks S = (m1,n2,n3), T = (n1,m2,n3), U = (n1,n2,m3), V = (m1,m2,m3).
/// Qubits are numbered A, B, C, D in turn, each block row-major; generators S, T, U, V likewise.
class XYZCode {
   public:
    XYZCode() = default;

    const BitMatrix& h(int l) const { return h_[l]; }
    std::size_t n(int l) const { return h_[l].cols(); }
    std::size_t m(int l) const { return h_[l].rows(); }
    const Shape3& block_shape(Block b) const { return qshape_[static_cast<int>(b)]; }
    const Shape3& check_shape(Check c) const { return cshape_[static_cast<int>(c)]; }
    std::size_t block_offset(Block b) const { return qoff_[static_cast<int>(b)]; }
    std::size_t check_offset(Check c) const { return coff_[static_cast<int>(c)]; }

    std::size_t num_qubits() const { return qoff_[4]; }
    std::size_t num_generators() const { return coff_[4]; }
    const PauliGroup& group() const { return group_; }
    const std::vector<PauliOperator>& generators() const { return group_.generators(); }

    std::size_t qubit_index(Block b, std::size_t i, std::size_t j, std::size_t k) const;
    QubitLocation qubit_location(std::size_t q) const;
    std::size_t generator_index(Check c, std::size_t i, std::size_t j, std::size_t k) const;
    std::string describe_qubit(std::size_t q) const;  // e.g. "A[0,1,2]"

    /// Hermitian +1 operator with sigma1^X sigma2^Y sigma3^Z on each block.
    PauliOperator from_blocks(const std::array<BlockPaulis, 4>& blocks) const;
    /// Single-letter operator: letter (0=X,1=Y,2=Z) on the support of t in block b.
    PauliOperator from_tensor(Block b, int letter, const Tensor3& t) const;
    /// X and Z support of p restricted to block b.
    std::pair<Tensor3, Tensor3> block_xz(const PauliOperator& p, Block b) const;

    /// Per-block exponent tensors of the stabilizer element with coefficients (S,T,U,V).
    std::array<BlockPaulis, 4> gamma_blocks(const CheckTensors& coeffs) const;
    PauliOperator gamma(const CheckTensors& coeffs) const { return from_blocks(gamma_blocks(coeffs)); }
    CheckTensors zero_checks() const;
    std::array<BlockPaulis, 4> zero_blocks() const;

    friend XYZCode build(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3);

   private:
    std::array<BitMatrix, 3> h_;
    std::array<BitMatrix, 3> ht_;
    std::array<Shape3, 4> qshape_{}, cshape_{};
    std::array<std::size_t, 5> qoff_{}, coff_{};
    PauliGroup group_;
};

XYZCode build(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3);

/// Commutation bit of e with every generator, arranged as (S, T, U, V) tensors.
CheckTensors syndrome(const XYZCode& code, const PauliOperator& e);

bool check_abelian(const XYZCode& code);
bool check_abelian(const PauliGroup& g);

struct TMembership {
    bool ok = false;
    std::string diagnostic;  // first failing condition, or "ok"
};

/// Membership in the family of triples that yields dimension-one codes:
/// square invertible odd-size matrices whose only common fixed vector with their
/// transposes is all-ones, and whose H H^T share no eigenvalue except a simple 1.
TMembership in_T(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3);

/// Canonical slice logicals. family 0: X on A and D slices e_i (x) u (x) u;
/// family 1: Y on A and C slices u (x) e_i (x) u; family 2: Z on A and B slices u (x) u (x) e_i.
/// `secondary` selects the other block pair (B,C), (B,D), (C,D) respectively.
PauliOperator slice_logical(const XYZCode& code, int family, std::size_t index, bool secondary = false);

/// The three canonical representatives; input error unless the triple passes in_T.
std::array<PauliOperator, 3> logical_representatives(const XYZCode& code);

/// Linear system over (S,T,U,V) whose kernel is the space of generator relations.
BitMatrix relation_system_matrix(const XYZCode& code);

}  // namespace xyz
