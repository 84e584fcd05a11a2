#pragma once

#include <optional>
#include <string>

#include "xyz/bits.hpp"
#include "xyz/code.hpp"
#include "xyz/distance.hpp"
#include "xyz/pauli.hpp"

namespace xyz {

struct CssCode {
    BitMatrix hx, hz;
    std::size_t n = 0;
};

/// Four qubits per original qubit in slot order (anchor, X, Y, Z). Each group gets
/// XXXX and ZZZZ checks; each generator g contributes phi_1(g) to hx and phi_3(g) to hz,
/// where phi_t maps the letter s on a qubit to sigma_t on the anchor and on slot s.
/// Phases are dropped.
CssCode css_convert(const PauliGroup& g);
inline CssCode css_convert(const XYZCode& code) { return css_convert(code.group()); }

/// hx hz^T == 0.
bool css_commutes(const CssCode& c);
/// n - rank(hx) - rank(hz); InputError if hx hz^T != 0.
std::size_t css_dimension(const CssCode& c);
/// X rows followed by Z rows as Pauli operators.
PauliGroup css_group(const CssCode& c);

struct CssDistanceReport {
    std::size_t cap = 0;
    std::optional<std::size_t> dx, dz, d;  // dx: lightest X-type logical
    std::optional<PauliOperator> x_witness, z_witness;
    std::size_t lower_bound = 1;
    std::uint64_t nodes = 0;
};

/// Capped search on each side; BudgetError if either side runs out of budget.
CssDistanceReport css_distance_capped(const CssCode& c, const SearchConfig& cfg);

/// Whether the operator touches an even number of qubits in every group of four.
bool even_on_groups(const PauliOperator& op);

/// Sparse alist listing (1-based indices, zero padded).
std::string to_alist(const BitMatrix& h);

}  // namespace xyz
