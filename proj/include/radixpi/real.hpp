#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace radixpi {

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// precision; arithmetic rounds to nearest-even and the result precision is
/// the larger of the operand precisions, so a computation seeded from one
/// RealContext stays at that context's precision throughout.
class Real {
public:
    Real();
    explicit Real(mpfr_prec_t prec);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_ui(unsigned long v, mpfr_prec_t prec);
    static Real from_si(long v, mpfr_prec_t prec);
    static Real from_double(double v, mpfr_prec_t prec);
    static Real from_rational(const mpq_class& q, mpfr_prec_t prec);
    static Real from_integer(const mpz_class& z, mpfr_prec_t prec);
    static Real from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    /// Rounds (nearest-even) to a new precision.
    Real to_precision(mpfr_prec_t prec) const;

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, unsigned long b);
    friend Real operator+(unsigned long a, const Real& b);
    friend Real operator-(unsigned long a, const Real& b);
    friend Real operator-(const Real& a, unsigned long b);
    friend Real operator*(const Real& a, unsigned long b);
    friend Real operator*(unsigned long a, const Real& b);
    friend Real operator/(const Real& a, unsigned long b);
    friend Real operator/(unsigned long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    int cmp_ui(unsigned long v) const { return mpfr_cmp_ui(v_, v); }
    int cmp_si(long v) const { return mpfr_cmp_si(v_, v); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    Real abs() const;
    Real sqrt() const;
    Real sqr() const;
    Real sin() const;
    Real cos() const;
    Real asin() const;
    Real pow_ui(unsigned long e) const;
    /// Exact scaling by 2^e.
    Real mul_2si(long e) const;

    /// Exponent of the leading bit (mpfr convention: 0.5 <= |m| < 1, x = m*2^exp).
    long exponent() const;
    /// One unit in the last place at this value's magnitude and precision.
    Real ulp() const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Round-half-even decimal rendering with `sig` significant digits,
    /// fixed notation ("3.1415...", "0.00123").
    std::string to_fixed(size_t sig) const;
    /// Scientific notation, `sig` significant digits ("4.8133e-05").
    std::string to_sci(size_t sig) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);

/// Precision context: a factory for Real values at a fixed precision with
/// nearest-even rounding. Holds the per-context cache of the reference pi
/// (computed once from the arctangent-series oracle at precision + 64 bits).
/// A context and its cache are meant to live on one logical task; create a
/// fresh context per thread instead of sharing one.
class RealContext {
public:
    explicit RealContext(mpfr_prec_t precision_bits);

    mpfr_prec_t precision_bits() const { return bits_; }

    Real make_ui(unsigned long v) const { return Real::from_ui(v, bits_); }
    Real make_si(long v) const { return Real::from_si(v, bits_); }
    Real make_double(double v) const { return Real::from_double(v, bits_); }
    Real make_rational(const mpq_class& q) const { return Real::from_rational(q, bits_); }

    /// Reference pi for this context. Independent arctangent-series
    /// computation, cached on first use.
    const Real& pi() const;

    /// (1 + sqrt 5) / 2 at context precision.
    Real phi() const;

    /// 2^(1 - precision): one ulp for magnitudes in [1, 2).
    Real unit_ulp() const { return Real::from_ui(1, bits_).mul_2si(1 - static_cast<long>(bits_)); }

private:
    mpfr_prec_t bits_;
    mutable std::optional<Real> pi_cache_;
};

}  // namespace radixpi
