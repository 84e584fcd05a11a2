#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "xyz/bits.hpp"
#include "xyz/code.hpp"
#include "xyz/pauli.hpp"
#include "xyz/tensor3.hpp"

namespace xyz {

/// Element of F2[x,y,z]/(x^n1+1, y^n2+1, z^n3+1); the coefficient of x^a y^b z^c
/// sits in cell (a,b,c) of the support tensor.
class RingPoly3 {
   public:
    RingPoly3() = default;
    explicit RingPoly3(Shape3 moduli) : support_(moduli) {}

    static RingPoly3 monomial(Shape3 moduli, long a, long b, long c);
    static RingPoly3 one(Shape3 moduli) { return monomial(moduli, 0, 0, 0); }
    /// Sum of var^e over the exponents (duplicates cancel), var = x, y, z for axis 0, 1, 2.
    static RingPoly3 univariate(Shape3 moduli, int axis, const std::vector<long>& exponents);
    static RingPoly3 from_tensor(const Tensor3& t) {
        RingPoly3 p;
        p.support_ = t;
        return p;
    }

    const Shape3& moduli() const { return support_.shape(); }
    const Tensor3& support() const { return support_; }
    std::size_t weight() const { return support_.weight(); }
    bool is_zero() const { return weight() == 0; }
    bool coeff(long a, long b, long c) const;
    void add_monomial(long a, long b, long c);
    /// Multiplication by x^a y^b z^c.
    RingPoly3 shifted(long a, long b, long c) const;

    RingPoly3& operator+=(const RingPoly3& o);
    friend RingPoly3 operator+(RingPoly3 a, const RingPoly3& b) { return a += b; }
    bool operator==(const RingPoly3& o) const = default;

    std::string to_string() const;

   private:
    Tensor3 support_;
};

RingPoly3 ring_mul(const RingPoly3& a, const RingPoly3& b);
inline RingPoly3 operator*(const RingPoly3& a, const RingPoly3& b) { return ring_mul(a, b); }
RingPoly3 ring_pow(const RingPoly3& a, std::uint64_t e);
/// x -> x^mult on one axis; mult must be a unit mod that axis's modulus.
RingPoly3 change_of_variables(const RingPoly3& p, int axis, long mult);

/// sum_e Omega^e with Omega|j> = |j+1>, i.e. entry ((j+e) mod n, j) per exponent.
BitMatrix circulant_of(const std::vector<long>& exponents, std::size_t n);
/// Exponents of a circulant (the support of its first column); InputError if not circulant.
std::vector<long> circulant_exponents(const BitMatrix& h);

struct CyclicSpec {
    Shape3 n{1, 1, 1};
    std::array<std::vector<long>, 3> p;

    RingPoly3 poly(int axis) const { return RingPoly3::univariate(n, axis, p[axis]); }
    /// (1 + P_l)^2.
    RingPoly3 q(int axis) const;
    BitMatrix matrix(int axis) const { return circulant_of(p[axis], n[axis]); }
    XYZCode code() const { return build(matrix(0), matrix(1), matrix(2)); }

    /// Every P_l = 1 + x.
    static CyclicSpec chamon(std::size_t n1, std::size_t n2, std::size_t n3);
    /// Every P_l = 1 + x + x^-1.
    static CyclicSpec xyz3d(std::size_t n1, std::size_t n2, std::size_t n3);
};

struct FractalResult {
    RingPoly3 op;     // (Q_i + Q_j)^(2^p - 1)
    RingPoly3 image;  // (Q_i + Q_j) op
    std::size_t image_weight = 0;
    std::size_t bound = 0;  // |Q_i| + |Q_j|
    bool frobenius_ok = false;  // image == Q_i(x^(2^p)) + Q_j(y^(2^p))
};

FractalResult fractal_operator(const CyclicSpec& spec, int axis_i, int axis_j, unsigned p);

/// dim ker(P -> (Q_i + Q_j) P) on F2[x_i, x_j]/(x_i^n_i + 1, x_j^n_j + 1).
std::size_t phi_kernel_dimension(const CyclicSpec& spec, int axis_i, int axis_j);

struct RowCollapser {
    RingPoly3 p13;          // (Q1 + Q3)^(2^(n3-1) - 1) + 1
    RingPoly3 image;        // (Q1 + Q3) p13
    RingPoly3 closed_form;  // Q1^(2^(n3-1)) + Q1
    bool single_row = false;
};

/// Needs n3 odd with 2^(n3-1) = 1 mod n3, so that z^(2^(n3-1)) = z.
RowCollapser p13_row_collapser(const CyclicSpec& spec);

/// |(1+xy)(1+x/y)P| + |(1+xz)(1+x/z)P + R| with R the z = 0 plane.
std::size_t dmin3d_objective(const Shape3& n, const RingPoly3& p);

struct ChamonLogical {
    /// Moduli in the order used; the code is built from them in this order.
    Shape3 n{};
    long m1 = 0, w1 = 0, q1 = 0;
    RingPoly3 p_prime, p_second;
    bool correction_applied = false;
    long r = 0, s = 0;
    std::size_t objective = 0;  // |(1+x/y)P| + |(1+x/z)P + R| for P = P' + P''
    std::size_t objective_p_prime = 0;
    std::size_t bound = 0;      // 2 q1 n3 + n2 (n1 - q1 w1)
    PauliOperator op;
    std::size_t weight = 0;
    std::size_t num_qubits = 0;
    bool zero_syndrome = false;
    bool logical = false;
};

/// Low-weight logical of the Chamon code from a polynomial P with small objective.
/// Both orders of (n2, n3) are tried and the one with the lower objective is kept.
/// The correction P'' is searched over r <= L and s <= max_s with s m1 = r mod n1.
ChamonLogical chamon_sqrt_logical(std::size_t n1, std::size_t n2, std::size_t n3, long max_s = -1);

/// Z on A and B at (l mod n1, l mod n2, 0) for l < k, realized on the code of `spec`.
PauliOperator barrier_step(const XYZCode& code, std::size_t k);

struct BarrierPath {
    std::vector<std::size_t> syndrome_weights;  // index k = 0 .. n1 n2
    std::size_t max_weight = 0;
    bool endpoint_is_plane = false;  // E(n1 n2) == Z on the z = 0 planes of A and B
    bool endpoint_zero_syndrome = false;
    bool endpoint_logical = false;
};

/// Flip-path from the identity to the two-plane Z logical for three identical circulants.
BarrierPath energy_barrier_path(std::size_t n1, std::size_t n2, std::size_t n3 = 3,
                                const std::vector<long>& exponents = {0, 1});

/// 4 (gcd(n1,n2,n3) - 1) + 1, for odd n_l not divisible by 3.
std::size_t dim_claim_3dxyz(std::size_t n1, std::size_t n2, std::size_t n3);

/// Number of exponent triples (a,b,c) in Z_n1 x Z_n2 x Z_n3 with a/n1 = +-b/n2 = +-c/n3 mod 1.
std::size_t congruence_solution_count(std::size_t n1, std::size_t n2, std::size_t n3);

}  // namespace xyz
