// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "xyz/code.hpp"
#include "xyz/css.hpp"
#include "xyz/cyclic.hpp"
#include "xyz/dimension.hpp"
#include "xyz/distance.hpp"
#include "xyz/linalg.hpp"
#include "xyz/poly.hpp"

using namespace xyz;
using xyz::testing::one_by_one;
using xyz::testing::random_matrix;
using xyz::testing::tri;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

BitMatrix h_of(std::size_t n) { return n == 1 ? one_by_one() : tri(n); }

using Triple = std::array<std::size_t, 3>;

const std::vector<Triple> kTTriples = {{1, 1, 1}, {5, 7, 13}, {5, 5, 7}, {5, 7, 11}, {1, 5, 7}, {7, 7, 11}, {5, 11, 13}};

void chamon_dimension_law(Outcome& o) {
    int count = 0;
    for (std::size_t a = 2; a <= 4; ++a)
        for (std::size_t b = 2; b <= 4; ++b)
            for (std::size_t c = 2; c <= 4; ++c) {
                std::size_t k = dimension_bruteforce(CyclicSpec::chamon(a, b, c).code());
                std::size_t expect = 4 * std::gcd(std::gcd(a, b), c);
                o.require(k == expect, "k(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
                ++count;
            }
    o.detail << count << " triples, k = 4 gcd on all";
}

void xyz3d_dimension(Outcome& o) {
    for (Triple t : std::vector<Triple>{{5, 7, 11}, {5, 5, 7}, {5, 5, 5}, {7, 7, 7}}) {
        std::size_t k = dimension_bruteforce(CyclicSpec::xyz3d(t[0], t[1], t[2]).code());
        std::size_t expect = dim_claim_3dxyz(t[0], t[1], t[2]);
        o.detail << "(" << t[0] << "," << t[1] << "," << t[2] << ")->" << k << " ";
        o.require(k == expect, "closed form");
    }
}

void modified_chamon_dimension(Outcome& o) {
    for (Triple t : std::vector<Triple>{{4, 3, 5}, {5, 3, 7}, {3, 5, 7}}) {
        XYZCode c = build(modified_chamon_matrix(t[0]), modified_chamon_matrix(t[1]), modified_chamon_matrix(t[2]));
        DimensionReport r = dimension_formula(c);
        bool all_one = r.k_bruteforce == 1 && r.r && r.base + static_cast<long long>(*r.r) == 1 && r.k_formula &&
                       *r.k_formula == 1;
        o.require(all_one && r.agreement, "routes disagree or k != 1");
        o.detail << "(" << t[0] << "," << t[1] << "," << t[2] << "): brute=" << r.k_bruteforce
                 << " relations=" << (r.r ? std::to_string(r.base + static_cast<long long>(*r.r)) : "-")
                 << " formula=" << (r.k_formula ? std::to_string(*r.k_formula) : "-") << " ";
    }
}

void sylvester_equivalence(Outcome& o) {
    std::mt19937_64 rng(20240601);
    std::size_t nonzero = 0;
    for (int t = 0; t < 500; ++t) {
        std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4;
        BitMatrix ma = random_matrix(rng, a, a), mb = random_matrix(rng, b, b), mc = random_matrix(rng, c, c);
        std::size_t d = sylvester_count_direct(ma, mb, mc), g = sylvester_count_gcd(ma, mb, mc);
        o.require(d == g, "triple " + std::to_string(t));
        nonzero += d > 0;
    }
    o.detail << "500 triples equal (" << nonzero << " with solutions)";
}

void fibonacci_char_polys(Outcome& o) {
    for (std::size_t n = 2; n <= 14; ++n) {
        BitMatrix h = modified_chamon_matrix(n);
        o.require(char_poly(h * h.transpose()) == fibonacci_polynomial(n), "char poly n=" + std::to_string(n));
    }
    for (std::size_t k = 1; k <= 14; ++k)
        for (std::size_t l = 1; l <= 14; ++l)
            o.require(poly_gcd(fibonacci_polynomial(k), fibonacci_polynomial(l)) == fibonacci_polynomial(std::gcd(k, l)),
                      "gcd law");
    o.detail << "n = 2..14 and 196 gcd pairs";
}

void validity_suite(Outcome& o) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        BitMatrix h[3];
        for (auto& m : h) m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
        XYZCode c = build(h[0], h[1], h[2]);
        o.require(check_abelian(c), "abelian");
        for (auto& g : c.generators()) o.require(syndrome(c, g).is_zero(), "generator syndrome");
    }
    for (Triple t : kTTriples) {
        XYZCode c = build(h_of(t[0]), h_of(t[1]), h_of(t[2]));
        std::string name = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
        o.require(in_T(c.h(0), c.h(1), c.h(2)).ok, "T membership of " + name);
        o.require(!minus_one_in_group(c.group()), "-1 in group");
    }
    o.detail << "50 random codes abelian, " << kTTriples.size() << " T triples without -1";
}

void single_cell_distance(Outcome& o) {
    XYZCode c = build(one_by_one(), one_by_one(), one_by_one());
    SearchConfig cfg;
    cfg.cap = 4;
    DistanceReport d = distance_capped(c, cfg);
    DStarReport ds = dstar(c.h(0), c.h(1), c.h(2), DStarStrategy::exhaustive);
    std::size_t k = dimension_bruteforce(c);
    o.require(k == 1, "k");
    o.require(d.exact_d && *d.exact_d == 2, "d");
    o.require(ds.best_doubled == 4 && ds.w == 1, "d*");
    o.require(d.exact_d && sandwich_holds(*d.exact_d, ds.best_doubled, ds.w), "sandwich");
    o.detail << "k=" << k << " d=" << (d.exact_d ? std::to_string(*d.exact_d) : "?") << " d*=" << ds.value()
             << " w=" << ds.w;
}

void equal_pair_mechanism(Outcome& o) {
    const std::size_t n = 5;
    BitMatrix h3 = modified_chamon_matrix(n);
    XYZCode c = build(tri(n), tri(n), h3);
    PauliOperator op = equal_pair_logical(tri(n), h3);
    o.require(op.weight() == 2 * n, "weight 2n");
    o.require(syndrome(c, op).is_zero(), "zero syndrome");
    o.require(c.group().contains(op, false).verdict == Membership::not_in_group, "not a stabilizer");
    auto partner = logical_partner(c.group(), op);
    o.require(partner && !commutes(*partner, op) && syndrome(c, *partner).is_zero(), "anticommuting logical");
    // Same mechanism on a triple in T, where the slice logicals are available.
    XYZCode t = build(tri(n), tri(n), tri(7));
    o.require(in_T(t.h(0), t.h(1), t.h(2)).ok, "T triple");
    PauliOperator opt = equal_pair_logical(tri(n), tri(7));
    o.require(syndrome(t, opt).is_zero(), "T zero syndrome");
    o.require(!commutes(opt, slice_logical(t, 0, 0)) || !commutes(opt, slice_logical(t, 1, 0)), "T anticommutation");
    SearchConfig cfg;
    cfg.cap = 4;
    SearchResult r = find_min_logical(c.group(), cfg);
    o.require(!r.budget_exceeded && !r.exact_d, "no logical of weight <= 4");
    o.detail << "N=" << c.num_qubits() << " k=" << dimension_bruteforce(c) << " weight=" << op.weight()
             << ", none of weight <= 4 (" << r.nodes << " nodes)";
}

void representative_bound(Outcome& o) {
    int count = 0;
    for (Triple t : std::vector<Triple>{{5, 5, 7}, {5, 7, 11}, {7, 11, 13}}) {
        XYZCode c = build(h_of(t[0]), h_of(t[1]), h_of(t[2]));
        RepresentativeBound rb = disjoint_representative_bound(c);  // throws on any invalid representative
        std::size_t total = rb.representatives[0].size() + rb.representatives[1].size() + rb.representatives[2].size();
        o.require(total == 2 * (t[0] + t[1] + t[2]), "representative count");
        o.require(rb.bound == 2 * std::min({t[0], t[1], t[2]}), "bound");
        o.detail << "(" << t[0] << "," << t[1] << "," << t[2] << ") bound " << rb.bound << " ";
        ++count;
    }
    o.detail << "from " << count << " triples";
}

void css_conversion(Outcome& o) {
    XYZCode toy = build(one_by_one(), one_by_one(), one_by_one());
    CssCode c = css_convert(toy);
    o.require(c.n == 16 && css_dimension(c) == 2, "n=16, k=2");
    SearchConfig cfg;
    cfg.cap = 6;
    CssDistanceReport d = css_distance_capped(c, cfg);
    o.require(d.d.has_value(), "distance within cap");
    std::mt19937_64 rng(11);
    std::vector<XYZCode> codes = {toy, CyclicSpec::chamon(2, 3, 2).code(), build(tri(5), one_by_one(), one_by_one())};
    for (int t = 0; t < 5; ++t) codes.push_back(build(random_matrix(rng, 2, 3), random_matrix(rng, 3, 2), random_matrix(rng, 2, 2)));
    for (const XYZCode& code : codes) {
        CssCode cc = css_convert(code);
        o.require(css_commutes(cc), "hx hz^T = 0");
        std::size_t max_orig = 0;
        for (auto& g : code.generators()) max_orig = std::max(max_orig, g.weight());
        for (std::size_t i = code.num_qubits(); i < cc.hx.rows(); ++i)
            o.require(cc.hx.row(i).popcount() <= 2 * code.generators()[i - code.num_qubits()].weight(), "weight <= 2x");
        o.require(css_dimension(cc) == 2 * dimension_bruteforce(code), "k doubles");
    }
    o.detail << "n=16 k=2, d=" << (d.d ? std::to_string(*d.d) : "> 6") << " (dx=" << (d.dx ? std::to_string(*d.dx) : "-")
             << ", dz=" << (d.dz ? std::to_string(*d.dz) : "-") << "), " << codes.size() << " codes commute";
}

void fractal_operators(Outcome& o) {
    std::size_t worst = 0;
    for (std::size_t n : {29u, 31u}) {
        CyclicSpec s = CyclicSpec::xyz3d(n, n, n);
        for (unsigned p = 1; p <= 6; ++p) {
            FractalResult f = fractal_operator(s, 0, 1, p);
            o.require(f.image_weight <= f.bound, "image weight bound");
            o.require(f.frobenius_ok, "Frobenius identity");
            worst = std::max(worst, f.image_weight);
        }
    }
    std::size_t kd = phi_kernel_dimension(CyclicSpec::xyz3d(5, 7, 11), 0, 1);
    o.require(kd == 1, "kernel dimension");
    o.detail << "max image weight " << worst << " <= 4 for p = 1..6, kernel dimension " << kd;
}

void energy_barrier(Outcome& o) {
    std::vector<std::size_t> maxima;
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 3}, {3, 4}, {4, 5}, {5, 6}}) {
        BarrierPath p = energy_barrier_path(a, b);
        o.require(p.endpoint_is_plane && p.endpoint_zero_syndrome && p.endpoint_logical, "endpoint");
        maxima.push_back(p.max_weight);
    }
    for (auto m : maxima) o.require(m == maxima[0], "constant maximum");
    o.detail << "max syndrome weight";
    for (auto m : maxima) o.detail << " " << m;
}

void chamon_sqrt(Outcome& o) {
    double ceiling = 0;
    for (Triple t : std::vector<Triple>{{3, 4, 5}, {5, 6, 7}, {5, 7, 9}, {7, 8, 9}, {7, 9, 11}, {9, 10, 11}, {11, 13, 15}, {13, 15, 17}, {17, 19, 21}}) {
        ChamonLogical c = chamon_sqrt_logical(t[0], t[1], t[2]);
        o.require(c.zero_syndrome, "zero syndrome");
        o.require(c.logical, "non-stabilizer");
        o.require(c.objective_p_prime <= c.bound, "objective <= bound");
        o.require(c.weight <= 4 * c.objective, "weight <= 4 objective");
        double ratio = c.weight / std::sqrt(static_cast<double>(c.num_qubits));
        ceiling = std::max(ceiling, ratio);
        o.detail << "(" << c.n[0] << "," << c.n[1] << "," << c.n[2] << "): w=" << c.weight << " obj=" << c.objective
                 << " bound=" << c.bound << "; ";
    }
    // Ceiling fixed from the smallest triple, where the ratio is largest (about 3.1).
    const double kCeiling = 3.2;
    o.require(ceiling < kCeiling, "weight/sqrt(N) ceiling");
    std::ostringstream head;
    head << "max weight/sqrt(N) = " << ceiling << " < " << kCeiling << "; ";
    o.detail.str(head.str() + o.detail.str());
}

void permutation_invariance(Outcome& o) {
    std::mt19937_64 rng(14);
    SearchConfig cfg;
    cfg.cap = 4;
    // One instance whose minimum is inside the cap and one where it is not.
    for (Triple t : std::vector<Triple>{{1, 1, 5}, {5, 5, 1}}) {
        const BitMatrix h1 = h_of(t[0]), h2 = h_of(t[1]), h3 = h_of(t[2]);
        o.require(in_T(h1, h2, h3).ok, "T triple");
        SearchResult ref = find_min_logical(build(h1, h2, h3).group(), cfg);
        for (int k = 0; k < 10; ++k) {
            Permutations p;
            const BitMatrix* hs[3] = {&h1, &h2, &h3};
            for (int l = 0; l < 3; ++l) {
                p.rows[l].resize(hs[l]->rows());
                p.cols[l].resize(hs[l]->cols());
                std::iota(p.rows[l].begin(), p.rows[l].end(), 0);
                std::iota(p.cols[l].begin(), p.cols[l].end(), 0);
                std::shuffle(p.rows[l].begin(), p.rows[l].end(), rng);
                std::shuffle(p.cols[l].begin(), p.cols[l].end(), rng);
            }
            o.require(permutation_invariance_check(h1, h2, h3, p, cfg), "minimum changed");
        }
        o.detail << "(" << t[0] << "," << t[1] << "," << t[2] << "): 10 permutations, capped minimum "
                 << (ref.exact_d ? std::to_string(*ref.exact_d) : "> 4") << "; ";
    }
}

void nonexpanding(Outcome& o) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 100; ++t) {
        std::size_t m1 = 1 + rng() % 5, n1 = 1 + rng() % 5, m2 = 1 + rng() % 5, n2 = 1 + rng() % 5;
        BitMatrix h1 = random_matrix(rng, m1, n1), h2 = random_matrix(rng, m2, n2), x = random_matrix(rng, m1, m2);
        NonExpandingError e = nonexpanding_error(h1, h2, x, 1 + rng() % 6);
        o.require(e.s.count_ones() == 0, "S block");
        o.require(e.t == e.t_closed, "T block");
    }
    o.detail << "100 cases";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"Chamon dimension law", chamon_dimension_law},
        {"3D XYZ dimension", xyz3d_dimension},
        {"modified Chamon dimension", modified_chamon_dimension},
        {"tensor Sylvester count", sylvester_equivalence},
        {"Fibonacci characteristic polynomials", fibonacci_char_polys},
        {"validity suite", validity_suite},
        {"single-cell code distance and sandwich", single_cell_distance},
        {"equal-pair logical", equal_pair_mechanism},
        {"disjoint representative bound", representative_bound},
        {"CSS conversion", css_conversion},
        {"fractal operators", fractal_operators},
        {"energy barrier", energy_barrier},
        {"Chamon sqrt(N) logical", chamon_sqrt},
        {"permutation invariance", permutation_invariance},
        {"non-expanding errors", nonexpanding},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "[exception: " << e.what() << "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.detail.str()
                  << " (" << std::fixed << std::setprecision(1) << secs << " s)" << std::defaultfloat << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
