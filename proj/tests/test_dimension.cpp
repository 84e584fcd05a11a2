#include <gtest/gtest.h>

#include <numeric>

#include "test_util.hpp"
#include "xyz/dimension.hpp"
#include "xyz/errors.hpp"
#include "xyz/linalg.hpp"
#include "xyz/poly.hpp"

using namespace xyz;
using xyz::testing::chamon_h;
using xyz::testing::one_by_one;
using xyz::testing::random_matrix;
using xyz::testing::tri;

namespace {

/// Solutions of AX = BX = CX by trying every tensor.
std::size_t sylvester_bruteforce(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c) {
    Shape3 s{a.rows(), b.rows(), c.rows()};
    std::size_t len = s[0] * s[1] * s[2], solutions = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        BitVector v(len);
        for (std::size_t i = 0; i < len; ++i) v.set(i, (mask >> i) & 1);
        Tensor3 x = Tensor3::unflatten(v, s);
        Tensor3 ax = apply_axis(a, x, 0), bx = apply_axis(b, x, 1), cx = apply_axis(c, x, 2);
        if (ax == bx && bx == cx) ++solutions;
    }
    std::size_t d = 0;
    while ((std::size_t{1} << d) < solutions) ++d;
    return d;
}

BitMatrix companion_x2_x_1() { return BitMatrix::from_rows(std::vector<std::string>{"01", "11"}); }

}  // namespace

TEST(dimension_bruteforce, examples) {
    EXPECT_EQ(dimension_bruteforce(build(one_by_one(), one_by_one(), one_by_one())), 1u);
    EXPECT_EQ(dimension_bruteforce(build(chamon_h(3), chamon_h(4), chamon_h(5))), 4u);
    EXPECT_EQ(dimension_bruteforce(build(chamon_h(2), chamon_h(2), chamon_h(4))), 8u);
}

TEST(sylvester_count, examples) {
    BitMatrix i2 = BitMatrix::identity(2);
    EXPECT_EQ(sylvester_count_direct(i2, i2, i2), 8u);
    EXPECT_EQ(sylvester_count_gcd(i2, i2, i2), 8u);
    EXPECT_EQ(sylvester_count_direct(companion_x2_x_1(), i2, i2), 0u);
    EXPECT_EQ(sylvester_bruteforce(companion_x2_x_1(), i2, i2), 0u);
    EXPECT_EQ(sylvester_count_gcd(companion_x2_x_1(), i2, i2), 0u);
    BitMatrix shift3 = circulant_of({1}, 3);
    EXPECT_EQ(char_poly(shift3), F2Polynomial::parse("x^3+1"));
    EXPECT_EQ(sylvester_count_gcd(shift3, one_by_one(), one_by_one()), 1u);
    EXPECT_EQ(sylvester_count_direct(shift3, one_by_one(), one_by_one()), 1u);
    EXPECT_THROW(sylvester_count_direct(BitMatrix(2, 3), i2, i2), InputError);
    EXPECT_THROW(sylvester_count_gcd(i2, BitMatrix(1, 2), i2), InputError);
}

TEST(sylvester_count, direct_matches_gcd_and_bruteforce) {
    std::mt19937_64 rng(20);
    for (int t = 0; t < 150; ++t) {
        std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
        BitMatrix ma = random_matrix(rng, a, a), mb = random_matrix(rng, b, b), mc = random_matrix(rng, c, c);
        if (t % 3 == 0) mb = ma.rows() == mb.rows() ? ma : mb;  // shared spectra are the interesting case
        std::size_t direct = sylvester_count_direct(ma, mb, mc);
        EXPECT_EQ(direct, sylvester_count_gcd(ma, mb, mc));
        if (a * b * c <= 12) {
            EXPECT_EQ(direct, sylvester_bruteforce(ma, mb, mc));
        }
    }
}

TEST(dimension_formula, examples) {
    DimensionReport toy = dimension_formula(build(one_by_one(), one_by_one(), one_by_one()));
    EXPECT_EQ(toy.k_bruteforce, 1u);
    EXPECT_EQ(toy.base, 0);
    EXPECT_EQ(*toy.s, 1u);
    EXPECT_EQ(*toy.k1t, 0u);
    EXPECT_EQ(*toy.k_formula, 1);
    EXPECT_TRUE(toy.agreement);

    DimensionReport mod = dimension_formula(build(modified_chamon_matrix(4), modified_chamon_matrix(3), modified_chamon_matrix(5)));
    EXPECT_EQ(mod.k_bruteforce, 1u);
    EXPECT_EQ(*mod.r, 0u);
    EXPECT_EQ(*mod.k_formula, 1);
    EXPECT_EQ(*mod.s, 0u);
    EXPECT_EQ(*mod.k1t, 0u);
    EXPECT_TRUE(mod.agreement);

    DimensionReport x3 = dimension_formula(build(tri(5), tri(7), tri(11)), 0);
    EXPECT_FALSE(x3.relation_route_run);
    EXPECT_EQ(*x3.k_formula, 1);
    EXPECT_EQ(x3.k_bruteforce, 1u);
}

TEST(dimension_formula, relation_identity_on_random_codes) {
    std::mt19937_64 rng(21);
    int applicable = 0;
    for (int t = 0; t < 80; ++t) {
        BitMatrix h[3];
        for (auto& m : h) m = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        XYZCode c = build(h[0], h[1], h[2]);
        DimensionReport r = dimension_formula(c);
        ASSERT_TRUE(r.r.has_value());
        EXPECT_EQ(r.base + static_cast<long long>(*r.r), static_cast<long long>(r.k_bruteforce));
        if (r.formula_applicable) {
            ++applicable;
            EXPECT_EQ(*r.k_formula, static_cast<long long>(r.k_bruteforce));
        }
        EXPECT_TRUE(r.agreement);
    }
    EXPECT_GT(applicable, 5);
}

TEST(dimension_formula, inapplicable_is_reported) {
    // All-zero-Gram matrices: H = [1 1] has H H^T = 0.
    BitMatrix h = BitMatrix::from_rows(std::vector<std::string>{"11"});
    DimensionReport r = dimension_formula(build(h, h, h));
    EXPECT_FALSE(r.formula_applicable);
    EXPECT_NE(r.note.find("inapplicable"), std::string::npos);
}

TEST(modified_chamon, fibonacci_char_polys_and_parity) {
    for (std::size_t n = 2; n <= 14; ++n) {
        BitMatrix h = modified_chamon_matrix(n);
        ASSERT_EQ(h.rows(), n - 1);
        ASSERT_EQ(h.cols(), n);
        BitMatrix g = h * h.transpose();
        EXPECT_EQ(char_poly(g), fibonacci_polynomial(n));
        bool invertible = rank(g) == n - 1;
        EXPECT_EQ(invertible, n % 2 == 1) << n;
    }
    EXPECT_EQ(char_poly(modified_chamon_matrix(3) * modified_chamon_matrix(3).transpose()), F2Polynomial::parse("x^2+1"));
    EXPECT_THROW(modified_chamon_matrix(1), InputError);
}
