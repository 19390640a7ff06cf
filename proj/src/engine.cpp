#include "radixpi/engine.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

#include "radixpi/refpi.hpp"

namespace radixpi::engine {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

void require_open_chord(const Real& c) {
    if (c.is_nan() || c.sign() <= 0 || c.cmp_ui(2) >= 0) {
        throw std::domain_error("chord must lie strictly between 0 and 2");
    }
}

// Square root with the negative-radicand policy: values within 4 ulp below
// zero are rounding jitter at exact endpoint chords and clamp to zero;
// anything lower signals inconsistent input.
Real guarded_sqrt(const Real& radicand, const RealContext& ctx) {
    if (radicand.sign() >= 0) return radicand.sqrt();
    Real window = Real::from_ui(1, ctx.precision_bits())
                      .mul_2si(3 - static_cast<long>(ctx.precision_bits()));
    if (radicand.abs() <= window) return ctx.make_ui(0);
    throw std::domain_error("negative radicand beyond the 4-ulp rounding window");
}

}  // namespace

Real chord_double_naive(const Real& c, const RealContext& ctx) {
    require_open_chord(c);
    Real inner = guarded_sqrt(4ul - c.sqr(), ctx);
    return guarded_sqrt(2ul - inner, ctx);
}

Real chord_double_stable(const Real& c, const RealContext& ctx) {
    require_open_chord(c);
    Real inner = guarded_sqrt(4ul - c.sqr(), ctx);
    return c / (inner + 2ul).sqrt();
}

Real nested_radical_eval(const Real& l1_sq, long depth, const RealContext& ctx) {
    if (depth < 2) throw std::domain_error("nested_radical_eval: depth must be at least 2");
    if (l1_sq.sign() <= 0) throw std::domain_error("nested_radical_eval: l1_sq must be positive");
    // The upper endpoint l1_sq = 4 (and rounding jitter just above it) goes
    // through the clamp inside guarded_sqrt.
    Real r = guarded_sqrt(4ul - l1_sq, ctx);
    for (long i = 0; i < depth - 2; ++i) {
        r = guarded_sqrt(r + 2ul, ctx);
    }
    return guarded_sqrt(2ul - r, ctx);
}

Real sine_oracle(const Real& alpha, long k, const RealContext& ctx) {
    if (k < 0) throw std::domain_error("sine_oracle: k must be non-negative");
    if (alpha.sign() <= 0 || alpha >= ctx.pi()) {
        throw std::domain_error("sine_oracle: alpha must lie in (0, pi)");
    }
    Real half = alpha.to_precision(ctx.precision_bits()).mul_2si(-(k + 1));
    return half.sin().mul_2si(1);
}

Real chord_start(const FormulaSpec& spec, const RealContext& ctx) {
    return spec.l1(ctx);
}

std::vector<ChordState> chord_chain(const FormulaSpec& spec, long k_max, const RealContext& ctx,
                                    bool stable) {
    std::vector<ChordState> chain;
    chain.reserve(static_cast<size_t>(k_max) + 1);
    Real c = chord_start(spec, ctx);
    chain.push_back({0, c, spec.id});
    for (long k = 1; k <= k_max; ++k) {
        c = stable ? chord_double_stable(c, ctx) : chord_double_naive(c, ctx);
        chain.push_back({k, c, spec.id});
    }
    return chain;
}

Real pi_estimate(const FormulaSpec& spec, long k, const RealContext& ctx) {
    if (k < 0) throw std::domain_error("pi_estimate: k must be non-negative");
    Real c = chord_start(spec, ctx);
    for (long i = 0; i < k; ++i) c = chord_double_stable(c, ctx);
    return (spec.mu_real(ctx) * c).mul_2si(k - 1);
}

Real error_model(const FormulaSpec& spec, long k) {
    if (k < 0) throw std::domain_error("error_model: k must be non-negative");
    RealContext ctx(96);
    Real mu = spec.mu_real(ctx);
    Real alpha = ctx.pi().mul_2si(1) / mu;
    Real cubic = mu * alpha * alpha * alpha / 12ul;
    return cubic.mul_2si(-2 * (k + 1));
}

ComputeResult compute_pi(const FormulaSpec& spec, long decimal_digits, long digit_cap) {
    if (decimal_digits < 1) throw std::domain_error("compute_pi: need at least one digit");
    long cap = std::min(digit_cap, kHardDigitLimit);
    if (decimal_digits > cap) {
        throw DigitCapError("compute_pi: " + std::to_string(decimal_digits) +
                            " digits exceeds the cap of " + std::to_string(cap));
    }
    double alpha = spec.alpha_approx();
    double err0 = std::log2(3.141592653589793 * alpha * alpha / 12.0);
    long k = static_cast<long>(
                 std::ceil((static_cast<double>(decimal_digits) * kLog2Of10 - err0) / 2.0)) +
             2;
    if (k < 1) k = 1;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(
        std::ceil(static_cast<double>(decimal_digits) * kLog2Of10) + 64 +
        std::ceil(std::log2(static_cast<double>(k) + 1.0)));
    RealContext ctx(prec);
    Real c = chord_start(spec, ctx);
    for (long i = 0; i < k; ++i) c = chord_double_stable(c, ctx);
    Real estimate = (spec.mu_real(ctx) * c).mul_2si(k - 1);
    return {estimate.to_fixed(static_cast<size_t>(decimal_digits)), k, prec};
}

std::vector<ConvergenceRecord> convergence_table(const FormulaSpec& spec, long k_max,
                                                 const RealContext& ctx) {
    if (k_max < 0 || k_max > 10000) {
        throw std::domain_error("convergence_table: k_max out of range");
    }
    RealContext guard(ctx.precision_bits() + 64);
    const Real& pi_ref = guard.pi();  // warm the cache before the parallel loop
    Real mu = spec.mu_real(ctx);
    std::vector<ChordState> chain = chord_chain(spec, k_max, ctx);

    std::vector<ConvergenceRecord> rows(static_cast<size_t>(k_max) + 1);
#pragma omp parallel for schedule(static)
    for (long k = 0; k <= k_max; ++k) {
        Real estimate = (mu * chain[static_cast<size_t>(k)].chord).mul_2si(k - 1);
        Real err = (estimate.to_precision(guard.precision_bits()) - pi_ref).abs();
        rows[static_cast<size_t>(k)] =
            ConvergenceRecord{k, estimate, err.to_precision(ctx.precision_bits()), std::nullopt};
    }
    for (long k = 1; k <= k_max; ++k) {
        auto& row = rows[static_cast<size_t>(k)];
        const auto& prev = rows[static_cast<size_t>(k - 1)];
        if (!prev.abs_error.is_zero()) {
            row.error_ratio = row.abs_error / prev.abs_error;
        }
    }
    return rows;
}

std::vector<StabilityRow> stability_exhibit(const FormulaSpec& spec, long k_max,
                                            mpfr_prec_t work_bits) {
    RealContext work(work_bits);
    RealContext wide(512);
    const Real& pi_ref = wide.pi();
    Real mu_wide = spec.mu_real(wide);

    // The naive recurrence can cancel all the way to a zero chord at fixed
    // precision (4 - c^2 rounds to 4); from that point on it carries no
    // information and its correct-bit count is zero.
    std::vector<Real> naive;
    naive.reserve(static_cast<size_t>(k_max) + 1);
    {
        Real c = chord_start(spec, work);
        naive.push_back(c);
        bool collapsed = false;
        for (long k = 1; k <= k_max; ++k) {
            if (!collapsed) {
                try {
                    c = chord_double_naive(c, work);
                } catch (const std::domain_error&) {
                    collapsed = true;
                }
                if (c.is_zero()) collapsed = true;
            }
            naive.push_back(collapsed ? work.make_ui(0) : c);
        }
    }
    std::vector<ChordState> stable = chord_chain(spec, k_max, work, /*stable=*/true);

    auto correct_bits = [&](const Real& chord, long k) -> long {
        if (chord.is_zero()) return 0;
        Real estimate = (mu_wide * chord.to_precision(512)).mul_2si(k - 1);
        Real rel = (estimate / pi_ref - 1ul).abs();
        if (rel.is_zero()) return 1 << 20;
        long bits = -rel.exponent();
        return bits > 0 ? bits : 0;
    };

    std::vector<StabilityRow> rows(static_cast<size_t>(k_max) + 1);
#pragma omp parallel for schedule(static)
    for (long k = 0; k <= k_max; ++k) {
        rows[static_cast<size_t>(k)] =
            StabilityRow{k, correct_bits(naive[static_cast<size_t>(k)], k),
                         correct_bits(stable[static_cast<size_t>(k)].chord, k)};
    }
    return rows;
}

}  // namespace radixpi::engine

namespace radixpi {

double FormulaSpec::alpha_approx() const {
    RealContext small(64);
    return 2.0 * 3.141592653589793 / mu.to_real(small).to_double();
}

}  // namespace radixpi
