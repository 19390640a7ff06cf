#pragma once

#include <string>
#include <vector>

#include "radixpi/formula.hpp"
#include "radixpi/golden.hpp"
#include "radixpi/real.hpp"

namespace radixpi::catalog {

struct UnknownFormulaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable registry of the formula instances: eq10_triangle, eq10_hexagon,
/// eq10_dodecagon, eq11, eq12, eq13, eq14, eq15, eq16, eq17.
const std::vector<FormulaSpec>& all_formulas();
const FormulaSpec& get_formula(const std::string& id);

/// One verified statement: an identity, its anchor tag, and the outcome.
struct IdentityResult {
    std::string suite;      // "exact", "numeric", "figure2"
    std::string id;         // short stable tag
    std::string statement;  // human-readable form
    bool pass = false;
    std::string detail;     // residual or mismatch description
};

/// The Q(sqrt 5) identities behind the catalog's singular last radicals,
/// checked by exact arithmetic. With `include_negative_control` a
/// deliberately mutated identity is appended; it must fail.
std::vector<IdentityResult> verify_exact_identities(bool include_negative_control = false);

/// Trig-to-algebraic equalities that are not decidable inside Q(sqrt 5);
/// each must hold within 2^-(precision-16). Needs >= 192 bits.
std::vector<IdentityResult> verify_numeric_identities(const RealContext& ctx);

/// Partial sum of the phi-BBP arctangent-flavored series for pi
/// (prefactor 5 sqrt(2+phi) / (2 phi), term ratio (2 phi)^-5), evaluated as
/// printed, smallest terms first, at context precision + 32 guard bits.
Real series_chan(long terms, const RealContext& ctx);

/// Partial sum of the phi-weighted series aimed at pi^2/50 (term ratio
/// phi^-5), evaluated as printed. The printed coefficients do not actually
/// sum to pi^2/50; see the compatibility verdict emitted by the CLI.
Real series_cloitre(long terms, const RealContext& ctx);

/// The rectangle-area constant (6/5)(1 + phi) = (6/5) phi^2, exactly.
GoldenElement dixon_constant();

/// Registry export: one block per formula in a stable key-value schema
/// (keys: formula, mu, alpha, l1, l1_sq, root_offset, tag, note).
std::string registry_export();

}  // namespace radixpi::catalog
