#include "xyz/cyclic.hpp"

#include <numeric>

#include "xyz/errors.hpp"
#include "xyz/linalg.hpp"

namespace xyz {

namespace {

std::size_t wrap(long e, std::size_t n) {
    long m = static_cast<long>(n);
    return static_cast<std::size_t>(((e % m) + m) % m);
}

std::array<std::size_t, 3> cell_of(std::size_t flat, const Shape3& s) {
    return {flat / (s[1] * s[2]), (flat / s[2]) % s[1], flat % s[2]};
}

/// var_axis -> var_axis^mult, with cancellation when mult is not a unit.
RingPoly3 substitute(const RingPoly3& p, int axis, std::uint64_t mult) {
    RingPoly3 out(p.moduli());
    const std::size_t n = p.moduli()[axis];
    for (std::size_t f : p.support().flatten().support()) {
        auto c = cell_of(f, p.moduli());
        c[axis] = static_cast<std::size_t>((static_cast<unsigned __int128>(c[axis]) * mult) % n);
        out.add_monomial(static_cast<long>(c[0]), static_cast<long>(c[1]), static_cast<long>(c[2]));
    }
    return out;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1 % m, x = b % m;
    for (; e; e >>= 1, x = x * x % m)
        if (e & 1) r = r * x % m;
    return static_cast<std::uint64_t>(r);
}

bool odd_not_three(std::size_t n) { return n % 2 == 1 && n % 3 != 0; }

}  // namespace

RingPoly3 RingPoly3::monomial(Shape3 moduli, long a, long b, long c) {
    RingPoly3 p(moduli);
    p.add_monomial(a, b, c);
    return p;
}

RingPoly3 RingPoly3::univariate(Shape3 moduli, int axis, const std::vector<long>& exponents) {
    RingPoly3 p(moduli);
    for (long e : exponents) {
        long c[3] = {0, 0, 0};
        c[axis] = e;
        p.add_monomial(c[0], c[1], c[2]);
    }
    return p;
}

bool RingPoly3::coeff(long a, long b, long c) const {
    const Shape3& m = moduli();
    return support_.get(wrap(a, m[0]), wrap(b, m[1]), wrap(c, m[2]));
}

void RingPoly3::add_monomial(long a, long b, long c) {
    const Shape3& m = moduli();
    if (m[0] == 0 || m[1] == 0 || m[2] == 0) throw InputError("ring moduli must be positive");
    support_.flip(wrap(a, m[0]), wrap(b, m[1]), wrap(c, m[2]));
}

RingPoly3 RingPoly3::shifted(long a, long b, long c) const {
    RingPoly3 out(moduli());
    for (std::size_t f : support_.flatten().support()) {
        auto cell = cell_of(f, moduli());
        out.add_monomial(static_cast<long>(cell[0]) + a, static_cast<long>(cell[1]) + b, static_cast<long>(cell[2]) + c);
    }
    return out;
}

RingPoly3& RingPoly3::operator+=(const RingPoly3& o) {
    if (moduli() != o.moduli()) throw InputError("ring moduli mismatch");
    support_ ^= o.support_;
    return *this;
}

std::string RingPoly3::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const char* vars = "xyz";
    for (std::size_t f : support_.flatten().support()) {
        auto c = cell_of(f, moduli());
        std::string term;
        for (int l = 0; l < 3; ++l) {
            if (c[l] == 0) continue;
            term += vars[l];
            if (c[l] > 1) term += "^" + std::to_string(c[l]);
        }
        if (term.empty()) term = "1";
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

RingPoly3 ring_mul(const RingPoly3& a, const RingPoly3& b) {
    if (a.moduli() != b.moduli()) throw InputError("ring moduli mismatch");
    const RingPoly3& sparse = a.weight() <= b.weight() ? a : b;
    const RingPoly3& other = a.weight() <= b.weight() ? b : a;
    const Shape3& m = a.moduli();
    RingPoly3 out(m);
    auto terms = other.support().flatten().support();
    for (std::size_t f : sparse.support().flatten().support()) {
        auto s = cell_of(f, m);
        for (std::size_t g : terms) {
            auto t = cell_of(g, m);
            out.add_monomial(static_cast<long>(s[0] + t[0]), static_cast<long>(s[1] + t[1]),
                             static_cast<long>(s[2] + t[2]));
        }
    }
    return out;
}

RingPoly3 ring_pow(const RingPoly3& a, std::uint64_t e) {
    RingPoly3 result = RingPoly3::one(a.moduli()), base = a;
    for (; e; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

RingPoly3 change_of_variables(const RingPoly3& p, int axis, long mult) {
    const std::size_t n = p.moduli()[axis];
    std::size_t m = wrap(mult, n);
    if (std::gcd(m, n) != 1) throw InputError("change of variables needs a unit exponent");
    return substitute(p, axis, m);
}

BitMatrix circulant_of(const std::vector<long>& exponents, std::size_t n) {
    if (n == 0) throw InputError("circulant size must be positive");
    BitMatrix h(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (long e : exponents) h.flip(wrap(static_cast<long>(j) + e, n), j);
    return h;
}

std::vector<long> circulant_exponents(const BitMatrix& h) {
    if (!h.square() || h.rows() == 0) throw InputError("circulant must be square and nonempty");
    std::vector<long> exps;
    for (std::size_t r = 0; r < h.rows(); ++r)
        if (h.get(r, 0)) exps.push_back(static_cast<long>(r));
    if (!(circulant_of(exps, h.rows()) == h)) throw InputError("matrix is not circulant");
    return exps;
}

RingPoly3 CyclicSpec::q(int axis) const {
    RingPoly3 t = RingPoly3::one(n) + poly(axis);
    return t * t;
}

CyclicSpec CyclicSpec::chamon(std::size_t n1, std::size_t n2, std::size_t n3) {
    CyclicSpec s;
    s.n = {n1, n2, n3};
    s.p = {std::vector<long>{0, 1}, {0, 1}, {0, 1}};
    return s;
}

CyclicSpec CyclicSpec::xyz3d(std::size_t n1, std::size_t n2, std::size_t n3) {
    CyclicSpec s;
    s.n = {n1, n2, n3};
    s.p = {std::vector<long>{0, 1, -1}, {0, 1, -1}, {0, 1, -1}};
    return s;
}

FractalResult fractal_operator(const CyclicSpec& spec, int axis_i, int axis_j, unsigned p) {
    if (p == 0 || p > 62) throw InputError("fractal exponent p must be in 1..62");
    if (axis_i == axis_j || axis_i < 0 || axis_i > 2 || axis_j < 0 || axis_j > 2)
        throw InputError("fractal operator needs two distinct axes");
    RingPoly3 qi = spec.q(axis_i), qj = spec.q(axis_j);
    FractalResult out;
    // (Qi+Qj)^(2^p - 1) = prod_{t<p} (Qi+Qj)^(2^t), and each factor is a Frobenius image.
    out.op = RingPoly3::one(spec.n);
    for (unsigned t = 0; t < p; ++t) {
        std::uint64_t e = std::uint64_t{1} << t;
        out.op = out.op * (substitute(qi, axis_i, e) + substitute(qj, axis_j, e));
    }
    out.image = (qi + qj) * out.op;
    out.image_weight = out.image.weight();
    out.bound = qi.weight() + qj.weight();
    std::uint64_t e = std::uint64_t{1} << p;
    out.frobenius_ok = out.image == substitute(qi, axis_i, e) + substitute(qj, axis_j, e);
    return out;
}

std::size_t phi_kernel_dimension(const CyclicSpec& spec, int axis_i, int axis_j) {
    if (axis_i == axis_j) throw InputError("kernel dimension needs two distinct axes");
    CyclicSpec plane = spec;
    for (int l = 0; l < 3; ++l)
        if (l != axis_i && l != axis_j) plane.n[l] = 1;
    RingPoly3 f = plane.q(axis_i) + plane.q(axis_j);
    const std::size_t len = plane.n[0] * plane.n[1] * plane.n[2];
    std::vector<BitVector> cols;
    for (std::size_t u = 0; u < len; ++u) {
        auto c = cell_of(u, plane.n);
        cols.push_back(f.shifted(static_cast<long>(c[0]), static_cast<long>(c[1]), static_cast<long>(c[2]))
                           .support()
                           .flatten());
    }
    return len - rank(BitMatrix::from_rows(std::move(cols), len));
}

RowCollapser p13_row_collapser(const CyclicSpec& spec) {
    const std::size_t n3 = spec.n[2];
    if (n3 % 2 == 0) throw InputError("row collapser needs n3 odd");
    if (pow_mod(2, n3 - 1, n3) != 1 % n3)
        throw InputError("row collapser needs 2^(n3-1) = 1 mod n3, which fails for n3 = " + std::to_string(n3));
    RingPoly3 q1 = spec.q(0), q3 = spec.q(2);
    RowCollapser out;
    RingPoly3 power = RingPoly3::one(spec.n);
    for (std::size_t t = 0; t + 1 < n3; ++t) {
        std::uint64_t e = pow_mod(2, t, std::uint64_t{1} << 62);
        power = power * (substitute(q1, 0, e) + substitute(q3, 2, e));
    }
    out.p13 = power + RingPoly3::one(spec.n);
    out.image = (q1 + q3) * out.p13;
    // Q1^(2^(n3-1)) = Q1(x^(2^(n3-1))), with the exponent reduced mod n1.
    std::uint64_t e1 = pow_mod(2, n3 - 1, spec.n[0]);
    out.closed_form = substitute(q1, 0, e1) + q1;
    out.single_row = true;
    for (std::size_t f : out.image.support().flatten().support()) {
        auto c = cell_of(f, spec.n);
        if (c[1] != 0 || c[2] != 0) out.single_row = false;
    }
    return out;
}

std::size_t dmin3d_objective(const Shape3& n, const RingPoly3& p) {
    for (std::size_t v : n)
        if (!odd_not_three(v)) throw InputError("objective needs odd moduli not divisible by 3");
    if (std::gcd(n[0], n[1]) != 1 || std::gcd(n[0], n[2]) != 1 || std::gcd(n[1], n[2]) != 1)
        throw InputError("objective needs pairwise coprime moduli");
    if (p.moduli() != n) throw InputError("polynomial has the wrong moduli");
    auto m = [&](long a, long b, long c) { return RingPoly3::monomial(n, a, b, c); };
    RingPoly3 one = RingPoly3::one(n);
    RingPoly3 f1 = (one + m(1, 1, 0)) * (one + m(1, -1, 0));
    RingPoly3 f2 = (one + m(1, 0, 1)) * (one + m(1, 0, -1));
    RingPoly3 r = RingPoly3::from_tensor(plane_tensor(n, 2, 0));
    return (f1 * p).weight() + (f2 * p + r).weight();
}

namespace {

struct ChamonOrder {
    Shape3 n;
    long m1 = 0, w1 = 0, q1 = 0;
    RingPoly3 slab;  // sum_j (x/y)^j sum_k (x/z)^k
};

std::size_t chamon_objective(const Shape3& n, const RingPoly3& p) {
    RingPoly3 one = RingPoly3::one(n);
    RingPoly3 r = RingPoly3::from_tensor(plane_tensor(n, 2, 0));
    return ((one + RingPoly3::monomial(n, 1, -1, 0)) * p).weight() +
           ((one + RingPoly3::monomial(n, 1, 0, -1)) * p + r).weight();
}

RingPoly3 x_progression(const Shape3& n, long start, long step, long count) {
    RingPoly3 p(n);
    for (long i = 0; i < count; ++i) p.add_monomial(start + i * step, 0, 0);
    return p;
}

}  // namespace

ChamonLogical chamon_sqrt_logical(std::size_t n1, std::size_t n2, std::size_t n3, long max_s) {
    if (n1 < 2 || n2 < 2 || n3 < 2) throw InputError("Chamon construction needs n_l >= 2");
    if (std::gcd(n1, n2) != 1 || std::gcd(n1, n3) != 1 || std::gcd(n2, n3) != 1)
        throw InputError("Chamon construction needs pairwise coprime sizes");
    if (max_s < 0) max_s = static_cast<long>(n1);

    std::optional<ChamonLogical> best;
    for (int order = 0; order < 2; ++order) {
        const long a = static_cast<long>(n1);
        const long b = static_cast<long>(order == 0 ? n2 : n3);
        const long c = static_cast<long>(order == 0 ? n3 : n2);
        const Shape3 n{n1, static_cast<std::size_t>(b), static_cast<std::size_t>(c)};
        ChamonLogical res;
        res.n = n;
        long m1 = 0;
        while (m1 < a && (m1 * b - c) % a != 0) ++m1;
        if (m1 == a) throw InternalError("no solution of m1 n2 = n3 mod n1 for coprime sizes");
        res.m1 = m1;
        res.w1 = 2 * m1 <= a ? 2 * m1 : 2 * (a - m1);
        res.q1 = a / res.w1;

        RingPoly3 slab(n);
        for (long j = 0; j < b; ++j)
            for (long k = 0; k < c; ++k) slab.add_monomial(j + k, -j, -k);
        RingPoly3 p = x_progression(n, 0, b, m1) * slab;
        res.p_prime = x_progression(n, 0, 2 * m1 * b, res.q1) * p;
        res.objective_p_prime = chamon_objective(n, res.p_prime);
        res.objective = res.objective_p_prime;
        res.p_second = RingPoly3(n);
        res.bound = static_cast<std::size_t>(2 * res.q1 * c + b * (a - res.q1 * res.w1));

        const long len = a - res.q1 * res.w1;
        for (long r = 1; r <= len; ++r)
            for (long s = 1; s <= max_s; ++s) {
                if (((s * m1 - r) % a + a) % a != 0) continue;
                RingPoly3 corr = x_progression(n, 2 * m1 * res.q1 * b, b, r) * x_progression(n, 0, c, s) * slab;
                std::size_t obj = chamon_objective(n, res.p_prime + corr);
                if (obj < res.objective) {
                    res.objective = obj;
                    res.p_second = corr;
                    res.correction_applied = true;
                    res.r = r;
                    res.s = s;
                }
            }
        if (!best || res.objective < best->objective) best = std::move(res);
    }

    ChamonLogical out = std::move(*best);
    CyclicSpec spec = CyclicSpec::chamon(out.n[0], out.n[1], out.n[2]);
    XYZCode code = spec.code();
    RingPoly3 p = out.p_prime + out.p_second;
    CheckTensors st;
    st[Check::S] = p.support();
    st[Check::T] = p.support();
    st[Check::U] = p.support();
    st[Check::V] = p.shifted(1, 0, 0).support();
    auto blocks = code.gamma_blocks(st);
    Tensor3 r0 = plane_tensor(out.n, 2, 0), r1 = plane_tensor(out.n, 2, 1);
    blocks[static_cast<int>(Block::A)].part[2] ^= r0;
    blocks[static_cast<int>(Block::B)].part[2] ^= r0;
    blocks[static_cast<int>(Block::C)].part[2] ^= r1;
    blocks[static_cast<int>(Block::D)].part[2] ^= r1;
    out.op = code.from_blocks(blocks);
    out.weight = out.op.weight();
    out.num_qubits = code.num_qubits();
    out.zero_syndrome = syndrome(code, out.op).is_zero();
    out.logical = out.zero_syndrome && code.group().contains(out.op, false).verdict == Membership::not_in_group;
    return out;
}

PauliOperator barrier_step(const XYZCode& code, std::size_t k) {
    const std::size_t n1 = code.n(0), n2 = code.n(1);
    std::array<BlockPaulis, 4> blocks = code.zero_blocks();
    for (std::size_t l = 0; l < k; ++l)
        for (Block b : {Block::A, Block::B}) blocks[static_cast<int>(b)].part[2].flip(l % n1, l % n2, 0);
    return code.from_blocks(blocks);
}

BarrierPath energy_barrier_path(std::size_t n1, std::size_t n2, std::size_t n3, const std::vector<long>& exponents) {
    if (n1 == 0 || n2 == 0 || n3 == 0) throw InputError("sizes must be positive");
    if (std::gcd(n1, n2) != 1) throw InputError("energy barrier path needs gcd(n1, n2) = 1");
    CyclicSpec spec;
    spec.n = {n1, n2, n3};
    spec.p = {exponents, exponents, exponents};
    XYZCode code = spec.code();
    if (code.block_shape(Block::B) != code.block_shape(Block::A)) throw InputError("path needs square circulants");
    BarrierPath path;
    PauliOperator last;
    for (std::size_t k = 0; k <= n1 * n2; ++k) {
        last = barrier_step(code, k);
        std::size_t w = syndrome(code, last).weight();
        path.syndrome_weights.push_back(w);
        path.max_weight = std::max(path.max_weight, w);
    }
    Tensor3 plane = plane_tensor(code.block_shape(Block::A), 2, 0);
    std::array<BlockPaulis, 4> blocks = code.zero_blocks();
    blocks[static_cast<int>(Block::A)].part[2] = plane;
    blocks[static_cast<int>(Block::B)].part[2] = plane;
    path.endpoint_is_plane = last == code.from_blocks(blocks);
    path.endpoint_zero_syndrome = path.syndrome_weights.back() == 0;
    path.endpoint_logical =
        path.endpoint_zero_syndrome && code.group().contains(last, false).verdict == Membership::not_in_group;
    return path;
}

std::size_t dim_claim_3dxyz(std::size_t n1, std::size_t n2, std::size_t n3) {
    for (std::size_t v : {n1, n2, n3})
        if (!odd_not_three(v)) throw InputError("closed form needs odd sizes not divisible by 3");
    return 4 * (std::gcd(std::gcd(n1, n2), n3) - 1) + 1;
}

std::size_t congruence_solution_count(std::size_t n1, std::size_t n2, std::size_t n3) {
    if (n1 == 0 || n2 == 0 || n3 == 0) throw InputError("sizes must be positive");
    // a/n1 = s b/n2 mod 1  <=>  a n2 = s b n1 mod n1 n2.
    auto match = [](std::size_t a, std::size_t na, std::size_t b, std::size_t nb) {
        std::size_t mod = na * nb, lhs = a * nb % mod, rhs = b * na % mod;
        return lhs == rhs || lhs == (mod - rhs) % mod;
    };
    std::size_t count = 0;
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b) {
            if (!match(a, n1, b, n2)) continue;
            for (std::size_t c = 0; c < n3; ++c)
                if (match(a, n1, c, n3)) ++count;
        }
    return count;
}

}  // namespace xyz
