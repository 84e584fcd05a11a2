#include "xyz/dimension.hpp"

#include "xyz/errors.hpp"
#include "xyz/linalg.hpp"
#include "xyz/poly.hpp"

namespace xyz {

std::size_t dimension_bruteforce(const XYZCode& code) {
    return code.num_qubits() - rank(code.group().symplectic_matrix());
}

std::size_t sylvester_count_direct(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c) {
    if (!a.square() || !b.square() || !c.square()) throw InputError("sylvester count needs square matrices");
    const Shape3 shape{a.rows(), b.rows(), c.rows()};
    const std::size_t len = shape[0] * shape[1] * shape[2];
    // Column u of the stacked system is [(A0 + B1) e_u ; (B1 + C2) e_u].
    std::vector<BitVector> columns;
    columns.reserve(len);
    for (std::size_t u = 0; u < len; ++u) {
        Tensor3 e = Tensor3::unflatten(BitVector::unit(len, u), shape);
        Tensor3 ta = apply_axis(a, e, 0), tb = apply_axis(b, e, 1), tc = apply_axis(c, e, 2);
        columns.push_back((ta ^ tb).flatten().concat((tb ^ tc).flatten()));
    }
    BitMatrix system = BitMatrix::from_rows(std::move(columns), 2 * len).transpose();
    return len - rank(system);
}

std::size_t sylvester_count_gcd(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c) {
    if (!a.square() || !b.square() || !c.square()) throw InputError("sylvester count needs square matrices");
    auto fa = invariant_factors(a), fb = invariant_factors(b), fc = invariant_factors(c);
    std::size_t total = 0;
    for (auto& p : fa)
        for (auto& q : fb) {
            F2Polynomial pq = poly_gcd(p, q);
            if (pq.is_one()) continue;
            for (auto& r : fc) total += *poly_gcd(pq, r).degree();
        }
    return total;
}

DimensionReport dimension_formula(const XYZCode& code, std::size_t relation_limit) {
    DimensionReport rep;
    rep.k_bruteforce = dimension_bruteforce(code);
    rep.base = 1;
    for (int l = 0; l < 3; ++l)
        rep.base *= static_cast<long long>(code.n(l)) - static_cast<long long>(code.m(l));

    if (code.num_generators() <= relation_limit) {
        BitMatrix sys = relation_system_matrix(code);
        rep.r = sys.cols() - rank(sys);
        rep.relation_route_run = true;
        if (rep.base + static_cast<long long>(*rep.r) != static_cast<long long>(rep.k_bruteforce))
            rep.agreement = false;
    } else {
        rep.note = "formula-only";
    }

    std::array<BitMatrix, 3> gram;
    std::array<bool, 3> invertible{};
    for (int l = 0; l < 3; ++l) {
        gram[l] = code.h(l) * code.h(l).transpose();
        invertible[l] = rank(gram[l]) == gram[l].rows();
    }
    for (int f = 0; f < 3; ++f) {
        int j = (f + 1) % 3, k = (f + 2) % 3;
        if (!invertible[j] || !invertible[k]) continue;
        rep.free_index = f;
        rep.s = sylvester_count_gcd(gram[0], gram[1], gram[2]);
        std::array<std::size_t, 3> ker{};
        for (int l = 0; l < 3; ++l) {
            std::size_t rk = rank(code.h(l));
            ker[l] = l == f ? code.m(l) - rk : code.n(l) - rk;  // kernel of H_f^T, of H_j, of H_k
        }
        rep.k1t = ker[f];
        rep.k2 = ker[j];
        rep.k3 = ker[k];
        rep.k_formula = rep.base + static_cast<long long>(*rep.s + ker[f] * ker[j] * ker[k]);
        rep.formula_applicable = true;
        if (*rep.k_formula != static_cast<long long>(rep.k_bruteforce)) rep.agreement = false;
        break;
    }
    if (!rep.formula_applicable) {
        if (!rep.note.empty()) rep.note += "; ";
        rep.note += "formula inapplicable: no two of H_l H_l^T are invertible";
    }
    return rep;
}

BitMatrix modified_chamon_matrix(std::size_t n) {
    if (n < 2) throw InputError("modified Chamon matrix needs n >= 2");
    BitMatrix h(n - 1, n);
    // Row r of I + Omega holds columns r and r-1 (mod n); the last row is dropped.
    for (std::size_t r = 0; r + 1 < n; ++r) {
        h.set(r, r);
        h.flip(r, (r + n - 1) % n);
    }
    return h;
}

}  // namespace xyz
