#include "xyz/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <mutex>
#include <random>
#include <thread>

#include "xyz/errors.hpp"
#include "xyz/linalg.hpp"

namespace xyz {

namespace {

int letter_of(bool x, bool z) { return x ? (z ? 1 : 0) : 2; }

/// A candidate's ordering key: support ascending, then letters X<Y<Z.
struct Key {
    std::vector<std::size_t> qubits;
    std::vector<int> letters;
    bool operator<(const Key& o) const {
        if (qubits != o.qubits) return qubits < o.qubits;
        return letters < o.letters;
    }
};

class Searcher {
   public:
    Searcher(const PauliGroup& g, const SearchConfig& cfg) : g_(g), cfg_(cfg), n_(g.num_qubits()), m_(g.size()) {
        words_ = (m_ + 63) / 64;
        gen_support_.resize(m_);
        anti_.assign(3 * n_, {});
        for (std::size_t gi = 0; gi < m_; ++gi) {
            const PauliOperator& op = g.generators()[gi];
            for (std::size_t q : op.support()) {
                int gl = letter_of(op.x().get(q), op.z().get(q));
                gen_support_[gi].push_back({static_cast<std::uint32_t>(q), gl});
                for (int l = 0; l < 3; ++l)
                    if (l != gl) anti_[3 * q + l].push_back(static_cast<std::uint32_t>(gi));
            }
        }
        for (auto& v : anti_) max_flip_ = std::max(max_flip_, v.size());
        // Words touched by each (qubit, letter) so syndromes update without a full xor.
        anti_words_.resize(3 * n_);
        for (std::size_t i = 0; i < anti_.size(); ++i) {
            std::vector<std::pair<std::uint32_t, std::uint64_t>> w;
            for (auto gi : anti_[i]) {
                std::uint32_t wi = gi / 64;
                std::uint64_t bit = std::uint64_t{1} << (gi % 64);
                if (!w.empty() && w.back().first == wi)
                    w.back().second ^= bit;
                else
                    w.push_back({wi, bit});
            }
            anti_words_[i] = std::move(w);
        }
    }

    SearchResult run() {
        SearchResult res;
        if (cfg_.cap == 0) throw InputError("cap must be at least 1");
        unsigned workers = cfg_.workers ? cfg_.workers : std::max(1u, std::thread::hardware_concurrency());
        for (std::size_t w = 1; w <= cfg_.cap && w <= n_; ++w) {
            std::atomic<std::size_t> next{0};
            std::mutex mu;
            std::optional<Key> best;
            auto work = [&] {
                Worker wk(*this, w);
                while (!stop_.load(std::memory_order_relaxed)) {
                    std::size_t q0 = next.fetch_add(1);
                    if (q0 >= n_) break;
                    wk.start(q0);
                }
                wk.flush_nodes();
                if (wk.best) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (!best || *wk.best < *best) best = wk.best;
                }
            };
            std::vector<std::thread> pool;
            for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
            work();
            for (auto& t : pool) t.join();
            res.nodes = nodes_.load();
            if (stop_.load()) {
                res.budget_exceeded = true;
                return res;
            }
            res.exhausted_weight = w;
            if (best) {
                res.exact_d = w;
                std::vector<char> letters(n_, 'I');
                for (std::size_t i = 0; i < best->qubits.size(); ++i) letters[best->qubits[i]] = "XYZ"[best->letters[i]];
                res.best = PauliOperator::from_letters(letters);
                res.exhausted_weight = w - 1;
                return res;
            }
        }
        return res;
    }

   private:
    struct Worker {
        Searcher& s;
        std::size_t target;
        std::vector<std::vector<std::uint64_t>> syn;
        std::vector<std::uint32_t> q;
        std::vector<int> l;
        std::vector<char> used;
        std::optional<Key> best;
        std::uint64_t local_nodes = 0;
        std::size_t q0 = 0;

        Worker(Searcher& s_, std::size_t w) : s(s_), target(w), syn(w + 1, std::vector<std::uint64_t>(s_.words_)), used(s_.n_, 0) {}

        void flush_nodes() {
            s.nodes_.fetch_add(local_nodes);
            local_nodes = 0;
        }

        void push(std::size_t depth, std::uint32_t qubit, int letter) {
            std::memcpy(syn[depth + 1].data(), syn[depth].data(), s.words_ * sizeof(std::uint64_t));
            for (auto [wi, bits] : s.anti_words_[3 * qubit + letter]) syn[depth + 1][wi] ^= bits;
            q.push_back(qubit);
            l.push_back(letter);
            used[qubit] = 1;
        }
        void pop() {
            used[q.back()] = 0;
            q.pop_back();
            l.pop_back();
        }

        void start(std::size_t first) {
            q0 = first;
            std::fill(syn[0].begin(), syn[0].end(), 0);
            for (int letter = 0; letter < 3; ++letter) {
                if (!(s.cfg_.letters & (1u << letter))) continue;
                push(0, static_cast<std::uint32_t>(first), letter);
                dfs(1);
                pop();
                if (s.stop_.load(std::memory_order_relaxed)) return;
            }
        }

        void dfs(std::size_t depth) {
            if (++local_nodes >= 4096) {
                std::uint64_t total = s.nodes_.fetch_add(local_nodes) + local_nodes;
                local_nodes = 0;
                if (total > s.cfg_.budget) s.stop_.store(true);
            }
            if (s.stop_.load(std::memory_order_relaxed)) return;
            const auto& cur = syn[depth];
            std::size_t flagged = 0, first = s.m_;
            for (std::size_t w = 0; w < s.words_; ++w) {
                if (cur[w] && first == s.m_) first = w * 64 + static_cast<std::size_t>(std::countr_zero(cur[w]));
                flagged += static_cast<std::size_t>(std::popcount(cur[w]));
            }
            if (flagged == 0) {
                if (depth == target) consider();
                return;  // lighter zero-syndrome pieces were handled at their own weight
            }
            if (depth == target) return;
            if (flagged > (target - depth) * s.max_flip_) return;
            for (auto [qubit, gl] : s.gen_support_[first]) {
                if (qubit <= q0 || used[qubit]) continue;
                for (int letter = 0; letter < 3; ++letter) {
                    if (letter == gl || !(s.cfg_.letters & (1u << letter))) continue;
                    push(depth, qubit, letter);
                    dfs(depth + 1);
                    pop();
                }
            }
        }

        void consider() {
            Key k;
            std::vector<std::size_t> order(q.size());
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });
            for (auto i : order) {
                k.qubits.push_back(q[i]);
                k.letters.push_back(l[i]);
            }
            if (best && !(k < *best)) return;
            std::vector<char> letters(s.n_, 'I');
            for (std::size_t i = 0; i < q.size(); ++i) letters[q[i]] = "XYZ"[l[i]];
            PauliOperator op = PauliOperator::from_letters(letters);
            if (s.g_.contains(op, false).verdict == Membership::not_in_group) best = std::move(k);
        }
    };

    const PauliGroup& g_;
    SearchConfig cfg_;
    std::size_t n_, m_, words_ = 0;
    std::vector<std::vector<std::pair<std::uint32_t, int>>> gen_support_;
    std::vector<std::vector<std::uint32_t>> anti_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> anti_words_;
    std::size_t max_flip_ = 1;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stop_{false};
};

std::size_t min_n(const XYZCode& code) { return std::min({code.n(0), code.n(1), code.n(2)}); }

}  // namespace

SearchResult find_min_logical(const PauliGroup& g, const SearchConfig& cfg) {
    Searcher s(g, cfg);
    return s.run();
}

DistanceReport distance_capped(const XYZCode& code, const SearchConfig& cfg) {
    DistanceReport rep;
    rep.cap = cfg.cap;
    SearchResult r = find_min_logical(code.group(), cfg);
    rep.nodes = r.nodes;
    rep.budget_exceeded = r.budget_exceeded;
    rep.exact_d = r.exact_d;
    rep.best_logical_found = r.best;
    rep.lower_bound = r.exhausted_weight + 1;
    rep.upper_bound = code.num_qubits();
    if (in_T(code.h(0), code.h(1), code.h(2)).ok) {
        rep.lower_bound = std::max(rep.lower_bound, 2 * min_n(code));
        std::size_t n1 = code.n(0), n2 = code.n(1), n3 = code.n(2);
        rep.upper_bound = 2 * std::min({n2 * n3, n1 * n3, n1 * n2});
    }
    if (r.exact_d) rep.lower_bound = rep.upper_bound = *r.exact_d;
    return rep;
}

RepresentativeBound disjoint_representative_bound(const XYZCode& code) {
    TMembership t = in_T(code.h(0), code.h(1), code.h(2));
    if (!t.ok) throw InputError("representative bound needs a triple in T: " + t.diagnostic);
    RepresentativeBound out;
    auto canon = logical_representatives(code);
    for (int f = 0; f < 3; ++f) {
        for (int sec = 0; sec < 2; ++sec)
            for (std::size_t i = 0; i < code.n(f); ++i) {
                PauliOperator rep = slice_logical(code, f, i, sec == 1);
                if (!syndrome(code, rep).is_zero()) throw InternalError("slice representative has a nonzero syndrome");
                if (code.group().contains(rep, false).verdict != Membership::not_in_group)
                    throw InternalError("slice representative lies in the stabilizer group");
                // Same logical class as the canonical one: their product is a stabilizer.
                if (code.group().contains(multiply(rep, canon[f]), false).verdict == Membership::not_in_group)
                    throw InternalError("slice representative is not equivalent to the canonical logical");
                out.representatives[f].push_back(std::move(rep));
            }
        const auto& reps = out.representatives[f];
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a + 1; b < reps.size(); ++b) {
                BitVector sa = reps[a].x() | reps[a].z(), sb = reps[b].x() | reps[b].z();
                if ((sa & sb).any()) throw InternalError("slice representatives overlap");
            }
    }
    out.bound = 2 * min_n(code);
    return out;
}

std::optional<PauliOperator> logical_partner(const PauliGroup& g, const PauliOperator& op) {
    const std::size_t n = g.num_qubits();
    // <g, p> = g_x . p_z + g_z . p_x, so each row is g written as (z | x).
    std::vector<BitVector> rows;
    for (const auto& gen : g.generators()) rows.push_back(gen.z().concat(gen.x()));
    rows.push_back(op.z().concat(op.x()));
    BitVector rhs(rows.size());
    rhs.set(rows.size() - 1);
    auto sol = solve(BitMatrix::from_rows(std::move(rows), 2 * n), rhs);
    if (!sol) return std::nullopt;
    return PauliOperator(sol->slice(0, n), sol->slice(n, n), 0).hermitian_positive();
}

PauliOperator equal_pair_logical(const BitMatrix& h, const BitMatrix& h3) {
    if (!h.square()) throw InputError("equal-pair logical needs a square matrix");
    XYZCode code = build(h, h, h3);
    std::array<BlockPaulis, 4> blocks = code.zero_blocks();
    for (Block b : {Block::A, Block::B}) {
        Tensor3& zpart = blocks[static_cast<int>(b)].part[2];
        for (std::size_t i = 0; i < h.cols(); ++i) zpart.set(i, i, 0);
    }
    return code.from_blocks(blocks);
}

namespace {

const std::array<std::array<int, 3>, 6> kPerms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

struct ObjectiveMaps {
    Shape3 shape;
    std::size_t len = 0;
    // Sparse column images of the three linear maps.
    std::array<std::vector<std::vector<std::uint32_t>>, 3> cols;
    BitVector r;
};

ObjectiveMaps objective_maps(const BitMatrix& hi, const BitMatrix& hj, const BitMatrix& hk) {
    ObjectiveMaps om;
    om.shape = {hi.rows(), hj.rows(), hk.rows()};
    om.len = om.shape[0] * om.shape[1] * om.shape[2];
    BitMatrix i2 = hi * hi, j2 = hj * hj, k2 = hk * hk;
    for (auto& c : om.cols) c.resize(om.len);
    for (std::size_t u = 0; u < om.len; ++u) {
        Tensor3 e = Tensor3::unflatten(BitVector::unit(om.len, u), om.shape);
        Tensor3 a = apply_axis(i2, e, 0), b = apply_axis(j2, e, 1), c = apply_axis(k2, e, 2);
        Tensor3 imgs[3] = {a ^ c, b ^ c, a ^ b};
        for (int t = 0; t < 3; ++t)
            for (auto p : imgs[t].flatten().support()) om.cols[t][u].push_back(static_cast<std::uint32_t>(p));
    }
    om.r = plane_tensor(om.shape, 2, 0).flatten();
    return om;
}

std::size_t evaluate(const ObjectiveMaps& om, const BitVector& m) {
    BitVector f1 = om.r, f2 = om.r, f3(om.len);
    for (auto u : m.support()) {
        for (auto p : om.cols[0][u]) f1.flip(p);
        for (auto p : om.cols[1][u]) f2.flip(p);
        for (auto p : om.cols[2][u]) f3.flip(p);
    }
    return 2 * f1.popcount() + 2 * f2.popcount() + f3.popcount();
}

void require_symmetric_T(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3) {
    for (const BitMatrix* h : {&h1, &h2, &h3})
        if (!h->square() || !h->is_symmetric()) throw InputError("d* needs symmetric square matrices");
    TMembership t = in_T(h1, h2, h3);
    if (!t.ok) throw InputError("d* needs a triple in T: " + t.diagnostic);
}

}  // namespace

std::size_t dstar_objective_doubled(const BitMatrix& hi, const BitMatrix& hj, const BitMatrix& hk, const Tensor3& m) {
    ObjectiveMaps om = objective_maps(hi, hj, hk);
    if (m.shape() != om.shape) throw InputError("M has the wrong shape for this permutation");
    return evaluate(om, m.flatten());
}

DStarReport dstar(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3, DStarStrategy strategy,
                  std::uint64_t budget, std::uint64_t seed, int restarts) {
    require_symmetric_T(h1, h2, h3);
    const BitMatrix* hs[3] = {&h1, &h2, &h3};
    DStarReport rep;
    rep.perms = kPerms;
    rep.seed = seed;
    rep.exact = strategy == DStarStrategy::exhaustive;
    rep.w = std::max({h1.max_row_weight(), h2.max_row_weight(), h3.max_row_weight()});
    const std::size_t len = h1.rows() * h2.rows() * h3.rows();
    if (strategy == DStarStrategy::exhaustive) {
        if (len > 24) throw InputError("exhaustive d* needs n1 n2 n3 <= 24");
        if ((std::uint64_t{6} << len) > budget) throw BudgetError("exhaustive d* exceeds the operation budget");
    }
    std::mt19937_64 rng(seed);
    bool have_best = false;
    for (int pi = 0; pi < 6; ++pi) {
        const auto& p = kPerms[pi];
        ObjectiveMaps om = objective_maps(*hs[p[0]], *hs[p[1]], *hs[p[2]]);
        std::size_t best = 0;
        BitVector best_m(len);
        if (strategy == DStarStrategy::exhaustive) {
            std::array<std::vector<std::uint32_t>, 3> colmask;
            for (int t = 0; t < 3; ++t) {
                colmask[t].assign(len, 0);
                for (std::size_t u = 0; u < len; ++u)
                    for (auto q : om.cols[t][u]) colmask[t][u] |= std::uint32_t{1} << q;
            }
            std::uint32_t rmask = 0;
            for (auto q : om.r.support()) rmask |= std::uint32_t{1} << q;
            std::uint32_t c1 = 0, c2 = 0, c3 = 0, gray = 0, best_gray = 0;
            best = 2 * std::popcount(rmask) * 2;
            for (std::uint64_t step = 1; step < (std::uint64_t{1} << len); ++step) {
                int bit = std::countr_zero(step);
                gray ^= std::uint32_t{1} << bit;
                c1 ^= colmask[0][bit];
                c2 ^= colmask[1][bit];
                c3 ^= colmask[2][bit];
                std::size_t v = 2 * std::popcount(c1 ^ rmask) + 2 * std::popcount(c2 ^ rmask) + std::popcount(c3);
                if (v < best) {
                    best = v;
                    best_gray = gray;
                }
            }
            for (std::size_t u = 0; u < len; ++u)
                if ((best_gray >> u) & 1) best_m.set(u);
        } else {
            best = evaluate(om, best_m);
            for (int r = 0; r < restarts; ++r) {
                BitVector m(len);
                if (r > 0)
                    for (std::size_t u = 0; u < len; ++u)
                        if (rng() & 1) m.set(u);
                BitVector f1 = om.r, f2 = om.r, f3(len);
                for (auto u : m.support()) {
                    for (auto q : om.cols[0][u]) f1.flip(q);
                    for (auto q : om.cols[1][u]) f2.flip(q);
                    for (auto q : om.cols[2][u]) f3.flip(q);
                }
                bool improved = true;
                while (improved) {
                    improved = false;
                    for (std::size_t u = 0; u < len; ++u) {
                        long delta = 0;
                        for (auto q : om.cols[0][u]) delta += f1.get(q) ? -2 : 2;
                        for (auto q : om.cols[1][u]) delta += f2.get(q) ? -2 : 2;
                        for (auto q : om.cols[2][u]) delta += f3.get(q) ? -1 : 1;
                        if (delta < 0) {
                            m.flip(u);
                            for (auto q : om.cols[0][u]) f1.flip(q);
                            for (auto q : om.cols[1][u]) f2.flip(q);
                            for (auto q : om.cols[2][u]) f3.flip(q);
                            improved = true;
                        }
                    }
                }
                std::size_t v = 2 * f1.popcount() + 2 * f2.popcount() + f3.popcount();
                if (v < best) {
                    best = v;
                    best_m = m;
                }
            }
        }
        rep.doubled[pi] = best;
        if (!have_best || best < rep.best_doubled) {
            have_best = true;
            rep.best_doubled = best;
            rep.best_perm = pi;
            rep.witness = Tensor3::unflatten(best_m, om.shape);
        }
    }
    return rep;
}

bool sandwich_holds(std::size_t d, std::size_t dstar_doubled, std::size_t w) {
    // d*/w <= d  <=>  2d* <= 2wd ;  d <= (3/2) w d*  <=>  4d <= 3w(2d*)
    return dstar_doubled <= 2 * w * d && 4 * d <= 3 * w * dstar_doubled;
}

TightnessResult tightness_logical(const XYZCode& code, const Tensor3& m) {
    for (int l = 0; l < 3; ++l)
        if (!code.h(l).square() || !code.h(l).is_symmetric())
            throw InputError("tightness construction needs symmetric square matrices");
    const BitMatrix &x = code.h(0), &y = code.h(1), &z = code.h(2);
    if (m.shape() != code.block_shape(Block::A)) throw InputError("M must have shape (n1, n2, n3)");
    auto X = [&](const Tensor3& t) { return apply_axis(x, t, 0); };
    auto Y = [&](const Tensor3& t) { return apply_axis(y, t, 1); };
    auto Z = [&](const Tensor3& t) { return apply_axis(z, t, 2); };
    CheckTensors st;
    st[Check::S] = X(Y(m));
    st[Check::T] = X(X(m));
    st[Check::U] = Y(Z(m));
    st[Check::V] = X(Z(m));
    auto blocks = code.gamma_blocks(st);
    Tensor3 r = plane_tensor(code.block_shape(Block::A), 2, 0);
    blocks[static_cast<int>(Block::A)].part[2] ^= r;
    blocks[static_cast<int>(Block::B)].part[2] ^= r;
    TightnessResult out;
    out.op = code.from_blocks(blocks);
    out.weight = out.op.weight();
    const auto& cb = blocks[static_cast<int>(Block::C)].part;
    out.c_block_weight = pauli_weight_identity(cb[0], cb[1], cb[2]);
    std::size_t w = std::max({x.max_row_weight(), y.max_row_weight(), z.max_row_weight()});
    std::size_t a = (X(X(m)) ^ Y(Y(m))).weight();
    std::size_t b = (X(X(m)) ^ Z(Z(m)) ^ r).weight();
    std::size_t c = (Y(Y(m)) ^ Z(Z(m)) ^ r).weight();
    out.bound_doubled = w * (3 * a + 3 * b + c);
    return out;
}

std::array<BitMatrix, 3> permute_matrices(const std::array<BitMatrix, 3>& h, const Permutations& p) {
    std::array<BitMatrix, 3> out;
    for (int l = 0; l < 3; ++l) out[l] = h[l].permuted(p.rows[l], p.cols[l]);
    return out;
}

PauliOperator permute_operator(const XYZCode& original, const XYZCode& permuted, const Permutations& p,
                               const PauliOperator& op) {
    // Axis types per block: true where the block dimension counts columns (n_l).
    static const bool col_axis[4][3] = {{true, true, true}, {false, false, true}, {false, true, false}, {true, false, false}};
    std::array<std::vector<std::size_t>, 3> rinv, cinv;
    for (int l = 0; l < 3; ++l) {
        rinv[l].resize(p.rows[l].size());
        cinv[l].resize(p.cols[l].size());
        for (std::size_t i = 0; i < p.rows[l].size(); ++i) rinv[l][p.rows[l][i]] = i;
        for (std::size_t j = 0; j < p.cols[l].size(); ++j) cinv[l][p.cols[l][j]] = j;
    }
    std::vector<char> letters(permuted.num_qubits(), 'I');
    for (std::size_t q : op.support()) {
        QubitLocation loc = original.qubit_location(q);
        std::size_t c[3] = {loc.i, loc.j, loc.k};
        int b = static_cast<int>(loc.block);
        for (int l = 0; l < 3; ++l) c[l] = col_axis[b][l] ? cinv[l][c[l]] : rinv[l][c[l]];
        letters[permuted.qubit_index(loc.block, c[0], c[1], c[2])] = op.letter(q);
    }
    return PauliOperator::from_letters(letters);
}

bool permutation_invariance_check(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& h3,
                                  const Permutations& p, const SearchConfig& cfg) {
    auto ph = permute_matrices({h1, h2, h3}, p);
    XYZCode a = build(h1, h2, h3), b = build(ph[0], ph[1], ph[2]);
    SearchResult ra = find_min_logical(a.group(), cfg), rb = find_min_logical(b.group(), cfg);
    if (ra.budget_exceeded || rb.budget_exceeded) throw BudgetError("permutation check exceeded the search budget");
    return ra.exact_d == rb.exact_d;
}

NonExpandingError nonexpanding_error(const BitMatrix& h1, const BitMatrix& h2, const BitMatrix& x, std::size_t k) {
    if (x.rows() != h1.rows() || x.cols() != h2.rows()) throw InputError("X must be m1 x m2");
    if (k == 0) throw InputError("k must be at least 1");
    BitMatrix g1 = h1 * h1.transpose(), g2 = h2 * h2.transpose();
    BitMatrix sum(x.rows(), x.cols());
    for (std::size_t l = 0; l < k; ++l) sum += g1.pow(l) * x * g2.pow(k - l - 1);
    NonExpandingError e;
    e.p = h1.transpose() * sum * h2;
    e.q = g1 * sum;
    e.s = h1 * e.p + e.q * h2;
    e.t = e.p * h2.transpose() + h1.transpose() * e.q;
    e.t_closed = h1.transpose() * (x * g2.pow(k) + g1.pow(k) * x);
    return e;
}

}  // namespace xyz
