#pragma once

#include <functional>
#include <optional>
#include <string>

#include "radixpi/golden.hpp"
#include "radixpi/real.hpp"

namespace radixpi {

/// One formula instance: an arc of the unit circle given by its arc ratio
/// mu = 2*pi/alpha and the starting chord L1 = 2 sin(alpha/2).
///
/// mu is stored exactly (rational entries have a zero phi part). The squared
/// chord is stored exactly when it lies in Q(sqrt 5); otherwise `l1_sq_eval`
/// is the numeric recipe evaluated at context precision and `l1_text` keeps
/// the exact textual expression.
///
/// `root_offset` maps the internal iteration index k (number of chord
/// halvings, estimate = mu * 2^(k-1) * c_k) onto the square-root count of
/// the formula's conventional nested-radical display: printed roots = k +
/// root_offset.
struct FormulaSpec {
    std::string id;
    GoldenElement mu;
    std::string mu_text;
    std::optional<GoldenElement> l1_sq_exact;
    std::function<Real(const RealContext&)> l1_sq_eval;
    std::string l1_text;
    std::string alpha_text;
    int root_offset = 0;
    std::string tag;
    std::string note;

    Real mu_real(const RealContext& ctx) const { return mu.to_real(ctx); }
    Real l1_sq(const RealContext& ctx) const {
        return l1_sq_exact ? l1_sq_exact->to_real(ctx) : l1_sq_eval(ctx);
    }
    Real l1(const RealContext& ctx) const { return l1_sq(ctx).sqrt(); }
    /// alpha = 2 pi / mu at context precision.
    Real alpha(const RealContext& ctx) const { return ctx.pi().mul_2si(1) / mu_real(ctx); }
    double alpha_approx() const;
};

/// Chord value after k halvings of the starting arc: c_k = 2 sin(alpha/2^(k+1)).
struct ChordState {
    long k = 0;
    Real chord;
    std::string spec_id;
};

/// One row of a convergence table.
struct ConvergenceRecord {
    long k = 0;
    Real estimate;
    Real abs_error;
    std::optional<Real> error_ratio;  // absent at k = 0
};

}  // namespace radixpi
