#include "xyz/code.hpp"

#include "xyz/errors.hpp"
#include "xyz/linalg.hpp"
#include "xyz/poly.hpp"

namespace xyz {

const char* block_name(Block b) {
    static const char* names[] = {"A", "B", "C", "D"};
    return names[static_cast<int>(b)];
}

const char* check_name(Check c) {
    static const char* names[] = {"S", "T", "U", "V"};
    return names[static_cast<int>(c)];
}

const std::array<GeneratorAction, 12>& generator_actions() {
    // letter: 0=X 1=Y 2=Z; matrix index l acts on axis l.
    static const std::array<GeneratorAction, 12> table = {{
        {Check::S, Block::A, 0, 0, true},
        {Check::S, Block::B, 1, 1, false},
        {Check::S, Block::C, 2, 2, false},
        {Check::T, Block::A, 1, 1, true},
        {Check::T, Block::B, 0, 0, false},
        {Check::T, Block::D, 2, 2, false},
        {Check::U, Block::A, 2, 2, true},
        {Check::U, Block::C, 0, 0, false},
        {Check::U, Block::D, 1, 1, false},
        {Check::V, Block::B, 2, 2, true},
        {Check::V, Block::C, 1, 1, true},
        {Check::V, Block::D, 0, 0, true},
    }};
    return table;
}

namespace {

void letter_bits(int letter, bool* x, bool* z) {
    *x = letter != 2;
    *z = letter != 0;
}

}  // namespace

XYZCode build(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3) {
    XYZCode c;
    c.h_ = {h1, h2, h3};
    for (int l = 0; l < 3; ++l) {
        if (c.h_[l].rows() == 0 || c.h_[l].cols() == 0) throw InputError("parity-check matrices must be nonempty");
        c.ht_[l] = c.h_[l].transpose();
    }
    const std::size_t n1 = h1.cols(), n2 = h2.cols(), n3 = h3.cols();
    const std::size_t m1 = h1.rows(), m2 = h2.rows(), m3 = h3.rows();
    c.qshape_ = {Shape3{n1, n2, n3}, Shape3{m1, m2, n3}, Shape3{m1, n2, m3}, Shape3{n1, m2, m3}};
    c.cshape_ = {Shape3{m1, n2, n3}, Shape3{n1, m2, n3}, Shape3{n1, n2, m3}, Shape3{m1, m2, m3}};
    for (int b = 0; b < 4; ++b) {
        c.qoff_[b + 1] = c.qoff_[b] + c.qshape_[b][0] * c.qshape_[b][1] * c.qshape_[b][2];
        c.coff_[b + 1] = c.coff_[b] + c.cshape_[b][0] * c.cshape_[b][1] * c.cshape_[b][2];
    }
    const std::size_t N = c.qoff_[4];

    // Column lists of every matrix that can act: col[l][transposed][input index] -> output indices.
    std::array<std::array<std::vector<std::vector<std::size_t>>, 2>, 3> cols;
    for (int l = 0; l < 3; ++l) {
        const BitMatrix& h = c.h_[l];
        cols[l][0].assign(h.cols(), {});
        cols[l][1].assign(h.rows(), {});
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t q : h.row(r).support()) {
                cols[l][0][q].push_back(r);  // H e_q has ones at rows r with H[r][q]
                cols[l][1][r].push_back(q);  // H^T e_r has ones at q with H[r][q]
            }
    }

    std::vector<PauliOperator> gens;
    gens.reserve(c.coff_[4]);
    for (int ci = 0; ci < 4; ++ci) {
        const Shape3 cs = c.cshape_[ci];
        for (std::size_t i = 0; i < cs[0]; ++i)
            for (std::size_t j = 0; j < cs[1]; ++j)
                for (std::size_t k = 0; k < cs[2]; ++k) {
                    BitVector x(N), z(N);
                    std::size_t ny = 0;
                    for (const auto& act : generator_actions()) {
                        if (static_cast<int>(act.check) != ci) continue;
                        std::size_t cell[3] = {i, j, k};
                        const auto& images = cols[act.matrix][act.transposed ? 1 : 0][cell[act.matrix]];
                        bool bx, bz;
                        letter_bits(act.letter, &bx, &bz);
                        for (std::size_t r : images) {
                            std::size_t out[3] = {i, j, k};
                            out[act.matrix] = r;
                            std::size_t q = c.qubit_index(act.block, out[0], out[1], out[2]);
                            if (bx) x.flip(q);
                            if (bz) z.flip(q);
                        }
                        if (act.letter == 1) ny += images.size();
                    }
                    gens.emplace_back(std::move(x), std::move(z), static_cast<std::uint8_t>(ny & 3));
                }
    }
    c.group_ = PauliGroup(std::move(gens));
    return c;
}

std::size_t XYZCode::qubit_index(Block b, std::size_t i, std::size_t j, std::size_t k) const {
    const Shape3& s = block_shape(b);
    if (i >= s[0] || j >= s[1] || k >= s[2]) throw InputError("qubit coordinate out of range");
    return qoff_[static_cast<int>(b)] + (i * s[1] + j) * s[2] + k;
}

QubitLocation XYZCode::qubit_location(std::size_t q) const {
    if (q >= num_qubits()) throw InputError("qubit index out of range");
    int b = 0;
    while (q >= qoff_[b + 1]) ++b;
    std::size_t r = q - qoff_[b];
    const Shape3& s = qshape_[b];
    return {static_cast<Block>(b), r / (s[1] * s[2]), (r / s[2]) % s[1], r % s[2]};
}

std::size_t XYZCode::generator_index(Check c, std::size_t i, std::size_t j, std::size_t k) const {
    const Shape3& s = check_shape(c);
    if (i >= s[0] || j >= s[1] || k >= s[2]) throw InputError("check coordinate out of range");
    return coff_[static_cast<int>(c)] + (i * s[1] + j) * s[2] + k;
}

std::string XYZCode::describe_qubit(std::size_t q) const {
    QubitLocation l = qubit_location(q);
    return std::string(block_name(l.block)) + "[" + std::to_string(l.i) + "," + std::to_string(l.j) + "," +
           std::to_string(l.k) + "]";
}

PauliOperator XYZCode::from_blocks(const std::array<BlockPaulis, 4>& blocks) const {
    const std::size_t N = num_qubits();
    BitVector x(N), z(N);
    for (int b = 0; b < 4; ++b) {
        for (int l = 0; l < 3; ++l)
            if (blocks[b].part[l].shape() != qshape_[b]) throw InputError("block tensor has the wrong shape");
        BitVector bx = blocks[b].part[0].flatten() ^ blocks[b].part[1].flatten();
        BitVector bz = blocks[b].part[1].flatten() ^ blocks[b].part[2].flatten();
        for (std::size_t i = bx.first_set(); i < bx.size(); i = bx.next_set(i + 1)) x.set(qoff_[b] + i);
        for (std::size_t i = bz.first_set(); i < bz.size(); i = bz.next_set(i + 1)) z.set(qoff_[b] + i);
    }
    PauliOperator p(x, z, 0);
    return p.hermitian_positive();
}

PauliOperator XYZCode::from_tensor(Block b, int letter, const Tensor3& t) const {
    std::array<BlockPaulis, 4> blocks = zero_blocks();
    blocks[static_cast<int>(b)].part[letter] = t;
    return from_blocks(blocks);
}

std::pair<Tensor3, Tensor3> XYZCode::block_xz(const PauliOperator& p, Block b) const {
    if (p.n() != num_qubits()) throw InputError("operator size does not match the code");
    const int bi = static_cast<int>(b);
    std::size_t len = qoff_[bi + 1] - qoff_[bi];
    return {Tensor3::unflatten(p.x().slice(qoff_[bi], len), qshape_[bi]),
            Tensor3::unflatten(p.z().slice(qoff_[bi], len), qshape_[bi])};
}

CheckTensors XYZCode::zero_checks() const {
    CheckTensors c;
    for (int i = 0; i < 4; ++i) c.t[i] = Tensor3(cshape_[i]);
    return c;
}

std::array<BlockPaulis, 4> XYZCode::zero_blocks() const {
    std::array<BlockPaulis, 4> out;
    for (int b = 0; b < 4; ++b)
        for (int l = 0; l < 3; ++l) out[b].part[l] = Tensor3(qshape_[b]);
    return out;
}

std::array<BlockPaulis, 4> XYZCode::gamma_blocks(const CheckTensors& coeffs) const {
    for (int i = 0; i < 4; ++i)
        if (coeffs.t[i].shape() != cshape_[i]) throw InputError("stabilizer coefficient tensor has the wrong shape");
    std::array<BlockPaulis, 4> out = zero_blocks();
    for (const auto& act : generator_actions()) {
        const BitMatrix& mat = act.transposed ? ht_[act.matrix] : h_[act.matrix];
        out[static_cast<int>(act.block)].part[act.letter] ^= apply_axis(mat, coeffs[act.check], act.matrix);
    }
    return out;
}

CheckTensors syndrome(const XYZCode& code, const PauliOperator& e) {
    if (e.n() != code.num_qubits()) throw InputError("syndrome: operator size does not match the code");
    CheckTensors s = code.zero_checks();
    const auto& gens = code.generators();
    for (int c = 0; c < 4; ++c) {
        std::size_t off = code.check_offset(static_cast<Check>(c));
        BitVector& bits = s.t[c].bits();
        for (std::size_t g = 0; g < bits.size(); ++g)
            if (symplectic_product(e, gens[off + g])) bits.set(g);
    }
    return s;
}

bool check_abelian(const PauliGroup& g) { return g.all_commute(); }
bool check_abelian(const XYZCode& code) { return code.group().all_commute(); }

namespace {

bool is_power_of_x_plus_1(F2Polynomial p) {
    const F2Polynomial x1 = F2Polynomial::parse("x+1");
    if (p.is_zero()) return false;
    while (!p.is_one()) {
        auto [q, r] = p.divmod(x1);
        if (!r.is_zero()) return false;
        p = q;
    }
    return true;
}

}  // namespace

TMembership in_T(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3) {
    const BitMatrix* hs[3] = {&h1, &h2, &h3};
    auto fail = [](std::string why) { return TMembership{false, std::move(why)}; };
    for (int l = 0; l < 3; ++l) {
        std::string name = "H" + std::to_string(l + 1);
        if (!hs[l]->square()) return fail(name + " is not square");
        if (rank(*hs[l]) != hs[l]->rows()) return fail(name + " is singular");
    }
    for (int l = 0; l < 3; ++l)
        if (hs[l]->cols() % 2 == 0)
            return fail("n" + std::to_string(l + 1) + " = " + std::to_string(hs[l]->cols()) + " is even");
    for (int l = 0; l < 3; ++l) {
        const std::size_t n = hs[l]->cols();
        BitMatrix id = BitMatrix::identity(n);
        auto ker = kernel_basis((*hs[l] + id).vstack(hs[l]->transpose() + id));
        BitVector ones(n);
        for (std::size_t i = 0; i < n; ++i) ones.set(i);
        if (ker.size() != 1 || !(ker[0] == ones))
            return fail("H" + std::to_string(l + 1) + " and its transpose do not fix exactly the all-ones vector");
    }
    F2Polynomial g;
    std::array<BitMatrix, 3> gram;
    for (int l = 0; l < 3; ++l) {
        gram[l] = *hs[l] * hs[l]->transpose();
        g = poly_gcd(g, char_poly(gram[l]));
    }
    if (!is_power_of_x_plus_1(g))
        return fail("H_l H_l^T share an eigenvalue other than 1 (char-poly gcd " + g.to_string() + ")");
    for (int l = 0; l < 3; ++l) {
        std::size_t n = gram[l].rows();
        if (n - rank(gram[l] + BitMatrix::identity(n)) != 1)
            return fail("eigenvalue 1 of H" + std::to_string(l + 1) + " H" + std::to_string(l + 1) +
                        "^T is not simple");
    }
    return {true, "ok"};
}

PauliOperator slice_logical(const XYZCode& code, int family, std::size_t index, bool secondary) {
    static const Block pairs[3][2][2] = {
        {{Block::A, Block::D}, {Block::B, Block::C}},
        {{Block::A, Block::C}, {Block::B, Block::D}},
        {{Block::A, Block::B}, {Block::C, Block::D}},
    };
    if (family < 0 || family > 2) throw InputError("logical family must be 0, 1 or 2");
    std::array<BlockPaulis, 4> blocks = code.zero_blocks();
    for (Block b : pairs[family][secondary ? 1 : 0])
        blocks[static_cast<int>(b)].part[family] = plane_tensor(code.block_shape(b), family, index);
    return code.from_blocks(blocks);
}

std::array<PauliOperator, 3> logical_representatives(const XYZCode& code) {
    TMembership t = in_T(code.h(0), code.h(1), code.h(2));
    if (!t.ok) throw InputError("logical representatives need a triple in T: " + t.diagnostic);
    return {slice_logical(code, 0, 0), slice_logical(code, 1, 0), slice_logical(code, 2, 0)};
}

BitMatrix relation_system_matrix(const XYZCode& code) {
    // A generator product is trivial iff on every block its X, Y and Z exponents agree;
    // rows (block, 0) hold X+Y and rows (block, 1) hold Y+Z.
    const std::size_t rows = 2 * code.num_qubits();
    BitMatrix mat(rows, code.num_generators());
    auto row_base = [&](int b, int eq) {
        Shape3 s = code.block_shape(static_cast<Block>(b));
        return 2 * code.block_offset(static_cast<Block>(b)) + static_cast<std::size_t>(eq) * s[0] * s[1] * s[2];
    };
    for (const auto& act : generator_actions()) {
        const BitMatrix& h = code.h(act.matrix);
        const Shape3 cs = code.check_shape(act.check);
        const Shape3 bs = code.block_shape(act.block);
        const int b = static_cast<int>(act.block);
        for (std::size_t i = 0; i < cs[0]; ++i)
            for (std::size_t j = 0; j < cs[1]; ++j)
                for (std::size_t k = 0; k < cs[2]; ++k) {
                    std::size_t col = code.generator_index(act.check, i, j, k);
                    std::size_t cell[3] = {i, j, k};
                    std::size_t in = cell[act.matrix];
                    std::size_t len = act.transposed ? h.cols() : h.rows();
                    for (std::size_t r = 0; r < len; ++r) {
                        bool hit = act.transposed ? h.get(in, r) : h.get(r, in);
                        if (!hit) continue;
                        std::size_t out[3] = {i, j, k};
                        out[act.matrix] = r;
                        std::size_t local = (out[0] * bs[1] + out[1]) * bs[2] + out[2];
                        if (act.letter != 2) mat.flip(row_base(b, 0) + local, col);
                        if (act.letter != 0) mat.flip(row_base(b, 1) + local, col);
                    }
                }
    }
    return mat;
}

}  // namespace xyz
