#pragma once

#include <string>
#include <vector>

#include "radixpi/formula.hpp"
#include "radixpi/real.hpp"

namespace radixpi::engine {

/// Thrown by compute_pi when the requested digit count exceeds the cap.
struct DigitCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long kDefaultDigitCap = 20000;
constexpr long kHardDigitLimit = 100000;

/// One chord-halving step, literal form sqrt(2 - sqrt(4 - c^2)).
/// Loses roughly half the working precision once c is small: the inner
/// square root approaches 2 and the subtraction cancels. Kept for the
/// stability comparison; not used on the production path.
Real chord_double_naive(const Real& c, const RealContext& ctx);

/// Same value computed as c / sqrt(2 + sqrt(4 - c^2)): relative error stays
/// O(ulp) for arbitrarily small chords.
Real chord_double_stable(const Real& c, const RealContext& ctx);

/// Evaluates the expanded radical
///     sqrt(2 - sqrt(2 + sqrt(2 + ... sqrt(2 + sqrt(4 - l1_sq)) ...)))
/// innermost-first with `depth` total square roots (depth >= 2). Equals
/// 2 sin(alpha / 2^depth) when l1_sq = (2 sin(alpha/2))^2.
///
/// Radicands within 4 ulp below zero are rounding jitter at exact endpoint
/// chords and clamp to zero; anything more negative is a domain error.
Real nested_radical_eval(const Real& l1_sq, long depth, const RealContext& ctx);

/// Reference chord c_k = 2 sin(alpha / 2^(k+1)) via the high-precision sine,
/// correct to 2 ulp. Requires 0 < alpha < pi.
Real sine_oracle(const Real& alpha, long k, const RealContext& ctx);

/// Starting chord c_0 = L1 for a formula at context precision.
Real chord_start(const FormulaSpec& spec, const RealContext& ctx);

/// Chords c_0..c_k_max from iterating the stable (default) or naive step.
std::vector<ChordState> chord_chain(const FormulaSpec& spec, long k_max, const RealContext& ctx,
                                    bool stable = true);

/// Truncated estimate pi_k = (mu/2) * 2^k * c_k, increasing in k and below
/// pi for every k.
Real pi_estimate(const FormulaSpec& spec, long k, const RealContext& ctx);

/// Predicted |pi - pi_k| from the cubic Taylor term of the chord sum:
///     (mu/2) * alpha^3 / (6 * 4^(k+1)).
/// Within 10% of the true error from k = 3 on (asymptotically exact).
Real error_model(const FormulaSpec& spec, long k);

struct ComputeResult {
    std::string digits;
    long iterations = 0;
    mpfr_prec_t precision_bits = 0;
};

/// pi to `decimal_digits` significant digits (round-half-even) through the
/// formula's chord recurrence. Iteration count comes from the error model
/// plus a safety margin; working precision is
/// ceil(digits * log2 10) + 64 + ceil(log2(k + 1)).
ComputeResult compute_pi(const FormulaSpec& spec, long decimal_digits,
                         long digit_cap = kDefaultDigitCap);

/// Rows k = 0..k_max with abs_error measured against the reference pi at
/// ctx precision + 64 guard bits. Row errors are computed in parallel;
/// ordering and output are deterministic.
std::vector<ConvergenceRecord> convergence_table(const FormulaSpec& spec, long k_max,
                                                 const RealContext& ctx);

struct StabilityRow {
    long k = 0;
    long naive_bits = 0;   // floor(-log2 |pi_k/pi - 1|), naive chain
    long stable_bits = 0;  // same, stable chain
};

/// Correct-bit counts of both recurrences at a fixed working precision,
/// measured against the reference pi at 512 bits.
std::vector<StabilityRow> stability_exhibit(const FormulaSpec& spec, long k_max,
                                            mpfr_prec_t work_bits);

}  // namespace radixpi::engine
