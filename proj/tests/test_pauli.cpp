#include <gtest/gtest.h>

#include <complex>

#include "test_util.hpp"
#include "xyz/errors.hpp"
#include "xyz/pauli.hpp"

using namespace xyz;
using xyz::testing::random_pauli;
using xyz::testing::random_tensor;

namespace {

using C = std::complex<double>;
using M2 = std::array<C, 4>;  // row-major 2x2

M2 mul(const M2& a, const M2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

M2 letter_matrix(char c) {
    const C i(0, 1);
    switch (c) {
        case 'X': return {0, 1, 1, 0};
        case 'Y': return {0, -i, i, 0};
        case 'Z': return {1, 0, 0, -1};
        default: return {1, 0, 0, 1};
    }
}

/// X^x Z^z on one qubit.
M2 xz_matrix(bool x, bool z) { return mul(x ? letter_matrix('X') : letter_matrix('I'), z ? letter_matrix('Z') : letter_matrix('I')); }

/// c with m == c * X^x Z^z, found by comparing against the four basis matrices.
bool decompose(const M2& m, bool x, bool z, C* c) {
    M2 b = xz_matrix(x, z);
    C ratio;
    bool have = false;
    for (int e = 0; e < 4; ++e) {
        if (std::abs(b[e]) < 1e-12) {
            if (std::abs(m[e]) > 1e-12) return false;
            continue;
        }
        C r = m[e] / b[e];
        if (have && std::abs(r - ratio) > 1e-12) return false;
        ratio = r;
        have = true;
    }
    *c = ratio;
    return true;
}

/// Product computed qubit by qubit with explicit 2x2 matrices.
PauliOperator matrix_product(const PauliOperator& p, const PauliOperator& q) {
    const C i(0, 1);
    C scalar = std::pow(i, p.phase()) * std::pow(i, q.phase());
    BitVector x(p.n()), z(p.n());
    for (std::size_t k = 0; k < p.n(); ++k) {
        M2 m = mul(xz_matrix(p.x().get(k), p.z().get(k)), xz_matrix(q.x().get(k), q.z().get(k)));
        bool rx = p.x().get(k) != q.x().get(k), rz = p.z().get(k) != q.z().get(k);
        C c;
        EXPECT_TRUE(decompose(m, rx, rz, &c));
        scalar *= c;
        x.set(k, rx);
        z.set(k, rz);
    }
    std::uint8_t phase = 0;
    for (std::uint8_t e = 0; e < 4; ++e)
        if (std::abs(scalar - std::pow(i, e)) < 1e-9) phase = e;
    return PauliOperator(x, z, phase);
}

std::vector<PauliOperator> all_single_qubit() {
    std::vector<PauliOperator> out;
    for (std::uint8_t ph = 0; ph < 4; ++ph)
        for (int xz = 0; xz < 4; ++xz) {
            BitVector x(1), z(1);
            x.set(0, xz & 1);
            z.set(0, xz & 2);
            out.emplace_back(x, z, ph);
        }
    return out;
}

}  // namespace

TEST(pauli, string_round_trip_and_letters) {
    PauliOperator p = PauliOperator::from_string("-XY_Z");
    EXPECT_EQ(p.to_string(), "-XY_Z");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.letter(1), 'Y');
    EXPECT_EQ(p.sign(), -1);
    EXPECT_EQ(p.phase(), 3);  // -1 * i for the single Y
    EXPECT_TRUE(p.is_hermitian());
    EXPECT_EQ(PauliOperator::from_string("+YY").phase(), 2);
    EXPECT_THROW(PauliOperator::from_string("XQ"), InputError);
}

TEST(pauli, single_qubit_products_match_matrices) {
    auto all = all_single_qubit();
    for (auto& a : all)
        for (auto& b : all) EXPECT_EQ(multiply(a, b), matrix_product(a, b)) << a.to_string() << " " << b.to_string();
    // Triple products: associativity against the matrix oracle on every 16^3 combination.
    for (auto& a : all)
        for (auto& b : all)
            for (auto& c : all) EXPECT_EQ(multiply(multiply(a, b), c), matrix_product(a, matrix_product(b, c)));
}

TEST(pauli, cyclic_product_table) {
    auto X = PauliOperator::from_string("X"), Y = PauliOperator::from_string("Y"), Z = PauliOperator::from_string("Z");
    // XYZ = i
    PauliOperator xyz = multiply(multiply(X, Y), Z);
    EXPECT_TRUE(xyz.is_identity_support());
    EXPECT_EQ(xyz.phase(), 1);
    EXPECT_EQ(multiply(X, Y).to_string(), "+iZ");
    EXPECT_EQ(multiply(Y, X).to_string(), "-iZ");
    EXPECT_EQ(multiply(Z, X).to_string(), "+iY");
}

TEST(pauli, hermitian_squares_are_identity) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        PauliOperator p = random_pauli(rng, 1 + rng() % 12);
        PauliOperator sq = multiply(p, p);
        EXPECT_TRUE(sq.is_identity_support());
        EXPECT_EQ(sq.phase(), 0);
    }
}

TEST(pauli, random_products_match_matrices_and_commutation) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 1 + rng() % 9;
        PauliOperator p = random_pauli(rng, n), q = random_pauli(rng, n);
        PauliOperator pq = multiply(p, q), qp = multiply(q, p);
        EXPECT_EQ(pq, matrix_product(p, q));
        // Anticommuting operators differ in the product by exactly -1.
        int diff = (pq.phase() + 4 - qp.phase()) % 4;
        EXPECT_EQ(diff == 2, !commutes(p, q));
        EXPECT_EQ(diff == 0, commutes(p, q));
        // Commutation by counting anticommuting positions.
        int anti = 0;
        for (std::size_t k = 0; k < n; ++k)
            if (p.letter(k) != 'I' && q.letter(k) != 'I' && p.letter(k) != q.letter(k)) anti ^= 1;
        EXPECT_EQ(symplectic_product(p, q), anti);
    }
}

TEST(pauli_group, contains_matches_subset_enumeration) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng() % 3, k = 1 + rng() % 4;
        std::vector<PauliOperator> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(random_pauli(rng, n));
        PauliGroup g(gens);
        // Enumerate every product, respecting generator order.
        std::vector<PauliOperator> elements;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            PauliOperator acc(n);
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1) acc = multiply(acc, gens[i]);
            elements.push_back(acc);
        }
        for (int s = 0; s < 20; ++s) {
            PauliOperator p = s < 8 ? elements[rng() % elements.size()] : random_pauli(rng, n);
            if (s % 3 == 0) p = p.negated();
            bool exact = false, support = false;
            for (auto& e : elements) {
                if (e.x() == p.x() && e.z() == p.z()) {
                    support = true;
                    if (e.phase() == p.phase()) exact = true;
                }
            }
            MembershipResult m = g.contains(p, true);
            if (!support) {
                EXPECT_EQ(m.verdict, Membership::not_in_group);
            } else if (g.all_commute() && !minus_one_in_group(g)) {
                // Without -1 in the group, the phase of an element does not depend on the combination.
                EXPECT_EQ(m.verdict == Membership::in_group, exact);
            } else {
                EXPECT_NE(m.verdict, Membership::not_in_group);
            }
            EXPECT_EQ(g.contains(p, false).verdict == Membership::not_in_group, !support);
        }
    }
}

TEST(pauli_group, minus_one_examples) {
    EXPECT_FALSE(minus_one_in_group(PauliGroup({PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ")})));
    EXPECT_TRUE(minus_one_in_group(PauliGroup({PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ"),
                                               PauliOperator::from_string("YY")})));
    EXPECT_FALSE(minus_one_in_group(PauliGroup({PauliOperator::from_string("XX"), PauliOperator::from_string("ZZ"),
                                                PauliOperator::from_string("-YY")})));
    // The identity with phase 2 is -1 itself.
    EXPECT_TRUE(minus_one_in_group(PauliGroup({PauliOperator::from_string("-__")})));
    EXPECT_TRUE(minus_one_in_group(PauliGroup({PauliOperator::from_string("ZI"), PauliOperator::from_string("-ZI")})));
    EXPECT_THROW(minus_one_in_group(PauliGroup({PauliOperator::from_string("X"), PauliOperator::from_string("Z"),
                                                PauliOperator::from_string("Y")})),
                 InternalError);
}

TEST(pauli_group, fix_signs_examples) {
    PauliGroup g({PauliOperator::from_string("-XX"), PauliOperator::from_string("ZZ"), PauliOperator::from_string("YY")});
    SignFixing f = fix_signs(g);
    ASSERT_EQ(f.chosen.size(), 2u);
    for (auto& op : f.independent) EXPECT_EQ(op.sign(), +1);
    EXPECT_EQ(f.sign_table[0], -1);
    EXPECT_EQ(f.sign_table[1], +1);
    // YY = -(XX)(ZZ), so with XX and ZZ positive it lands at sign -1.
    EXPECT_EQ(f.sign_table[2], -1);
    EXPECT_THROW(fix_signs(PauliGroup({PauliOperator::from_string("X"), PauliOperator::from_string("Z")})), InputError);
}

TEST(pauli_weight_identity, matches_per_site_count) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        Shape3 s{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
        Tensor3 ax = random_tensor(rng, s), ay = random_tensor(rng, s), az = random_tensor(rng, s);
        std::size_t direct = 0;
        for (std::size_t i = 0; i < ax.size(); ++i) {
            bool a = ax.flatten().get(i), b = ay.flatten().get(i), c = az.flatten().get(i);
            // sigma1^a sigma2^b sigma3^c is the identity exactly when a == b == c.
            if (!(a == b && b == c)) ++direct;
        }
        EXPECT_EQ(pauli_weight_identity(ax, ay, az), direct);
    }
    EXPECT_THROW(pauli_weight_identity(Tensor3({1, 1, 1}), Tensor3({1, 1, 2}), Tensor3({1, 1, 1})), InputError);
}
