#include "xyz/css.hpp"

#include <algorithm>
#include <sstream>

#include "xyz/errors.hpp"
#include "xyz/linalg.hpp"

namespace xyz {

namespace {

int slot_of(char letter) { return letter == 'X' ? 1 : letter == 'Y' ? 2 : 3; }

BitVector phi_row(const PauliOperator& g) {
    BitVector row(4 * g.n());
    for (std::size_t q : g.support()) {
        row.set(4 * q);
        row.set(4 * q + slot_of(g.letter(q)));
    }
    return row;
}

}  // namespace

CssCode css_convert(const PauliGroup& g) {
    if (!g.all_commute()) throw InputError("CSS conversion needs commuting generators");
    const std::size_t n = g.num_qubits();
    std::vector<BitVector> rows;
    for (std::size_t q = 0; q < n; ++q) {
        BitVector r(4 * n);
        for (int s = 0; s < 4; ++s) r.set(4 * q + s);
        rows.push_back(r);
    }
    for (const auto& gen : g.generators()) rows.push_back(phi_row(gen));
    CssCode c;
    c.n = 4 * n;
    c.hx = BitMatrix::from_rows(rows, c.n);
    c.hz = c.hx;  // phi_3 images have the same supports as phi_1 images
    if (!css_commutes(c)) throw InternalError("converted code violates hx hz^T = 0");
    return c;
}

bool css_commutes(const CssCode& c) {
    if (c.hx.cols() != c.n || c.hz.cols() != c.n) throw InputError("check matrices must have n columns");
    for (std::size_t i = 0; i < c.hx.rows(); ++i)
        for (std::size_t j = 0; j < c.hz.rows(); ++j)
            if (c.hx.row(i).dot(c.hz.row(j))) return false;
    return true;
}

std::size_t css_dimension(const CssCode& c) {
    if (!css_commutes(c)) throw InputError("CSS condition hx hz^T = 0 violated");
    return c.n - rank(c.hx) - rank(c.hz);
}

PauliGroup css_group(const CssCode& c) {
    std::vector<PauliOperator> gens;
    for (std::size_t i = 0; i < c.hx.rows(); ++i) gens.emplace_back(c.hx.row(i), BitVector(c.n), 0);
    for (std::size_t i = 0; i < c.hz.rows(); ++i) gens.emplace_back(BitVector(c.n), c.hz.row(i), 0);
    PauliGroup g(std::move(gens));
    // An empty generator list would lose the qubit count.
    if (g.num_qubits() != c.n) throw InputError("CSS code needs at least one check row");
    return g;
}

CssDistanceReport css_distance_capped(const CssCode& c, const SearchConfig& cfg) {
    PauliGroup g = css_group(c);
    CssDistanceReport rep;
    rep.cap = cfg.cap;
    for (int side = 0; side < 2; ++side) {
        SearchConfig sc = cfg;
        sc.letters = side == 0 ? 1u : 4u;
        SearchResult r = find_min_logical(g, sc);
        rep.nodes += r.nodes;
        if (r.budget_exceeded) throw BudgetError("CSS distance search exceeded its budget");
        if (side == 0) {
            rep.dx = r.exact_d;
            rep.x_witness = r.best;
        } else {
            rep.dz = r.exact_d;
            rep.z_witness = r.best;
        }
    }
    // Each side stops at its own minimum, and a missing side has nothing up to the cap.
    if (rep.dx || rep.dz) rep.d = std::min(rep.dx.value_or(cfg.cap + 1), rep.dz.value_or(cfg.cap + 1));
    rep.lower_bound = rep.d ? *rep.d : cfg.cap + 1;
    return rep;
}

bool even_on_groups(const PauliOperator& op) {
    if (op.n() % 4 != 0) throw InputError("operator length is not a multiple of 4");
    BitVector s = op.x() | op.z();
    for (std::size_t q = 0; q < op.n(); q += 4)
        if ((s.get(q) + s.get(q + 1) + s.get(q + 2) + s.get(q + 3)) % 2) return false;
    return true;
}

std::string to_alist(const BitMatrix& h) {
    std::ostringstream os;
    BitMatrix t = h.transpose();
    std::size_t max_col = 0, max_row = 0;
    for (std::size_t j = 0; j < t.rows(); ++j) max_col = std::max(max_col, t.row(j).popcount());
    for (std::size_t i = 0; i < h.rows(); ++i) max_row = std::max(max_row, h.row(i).popcount());
    os << h.cols() << ' ' << h.rows() << '\n' << max_col << ' ' << max_row << '\n';
    auto weights = [&](const BitMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? " " : "") << m.row(i).popcount();
        os << '\n';
    };
    weights(t);
    weights(h);
    auto lists = [&](const BitMatrix& m, std::size_t width) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            auto s = m.row(i).support();
            for (std::size_t k = 0; k < width; ++k) os << (k ? " " : "") << (k < s.size() ? s[k] + 1 : 0);
            os << '\n';
        }
    };
    lists(t, max_col);
    lists(h, max_row);
    return os.str();
}

}  // namespace xyz
