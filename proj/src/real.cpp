#include "radixpi/real.hpp"

#include "radixpi/refpi.hpp"

#include <algorithm>
#include <cstring>

namespace radixpi {

namespace {
mpfr_prec_t binop_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

Real::Real() { mpfr_init2(v_, 53); }

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }

Real::Real(const Real& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    // Leave the source initialized so its destructor stays valid.
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, 53);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_ui(unsigned long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_si(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from_integer(const mpz_class& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("Real::from_string: cannot parse '" + s + "'");
    }
    return r;
}

Real Real::to_precision(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& rhs) {
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) {
    Real r(binop_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(binop_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(binop_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(binop_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_add_ui(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator+(unsigned long a, const Real& b) { return b + a; }

Real operator-(unsigned long a, const Real& b) {
    Real r(b.precision());
    mpfr_ui_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_sub_ui(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_mul_ui(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator*(unsigned long a, const Real& b) { return b * a; }

Real operator/(const Real& a, unsigned long b) {
    Real r(a.precision());
    mpfr_div_ui(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

Real operator/(unsigned long a, const Real& b) {
    Real r(b.precision());
    mpfr_ui_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    Real r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sqr() const {
    Real r(precision());
    mpfr_sqr(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::sin() const {
    Real r(precision());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::cos() const {
    Real r(precision());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::asin() const {
    Real r(precision());
    mpfr_asin(r.v_, v_, MPFR_RNDN);
    return r;
}

Real Real::pow_ui(unsigned long e) const {
    Real r(precision());
    mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
    return r;
}

Real Real::mul_2si(long e) const {
    Real r(precision());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

long Real::exponent() const {
    if (is_zero()) return 0;
    return static_cast<long>(mpfr_get_exp(v_));
}

Real Real::ulp() const {
    Real one = Real::from_ui(1, precision());
    return one.mul_2si(exponent() - static_cast<long>(precision()));
}

namespace {

// Renders the (digits, exponent) pair produced by mpfr_get_str. `exp10` is
// the position of the decimal point: value = 0.digits * 10^exp10.
std::string place_point(const std::string& digits, long exp10, bool neg) {
    std::string out = neg ? "-" : "";
    if (exp10 <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-exp10), '0');
        out += digits;
    } else if (static_cast<size_t>(exp10) >= digits.size()) {
        out += digits;
        out.append(static_cast<size_t>(exp10) - digits.size(), '0');
    } else {
        out += digits.substr(0, static_cast<size_t>(exp10));
        out += '.';
        out += digits.substr(static_cast<size_t>(exp10));
    }
    return out;
}

std::string get_digits(mpfr_srcptr v, size_t sig, long& exp10, bool& neg) {
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, sig, v, MPFR_RNDN);
    if (s == nullptr) throw std::runtime_error("mpfr_get_str failed");
    std::string digits(s);
    mpfr_free_str(s);
    neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    exp10 = static_cast<long>(e);
    return digits;
}

}  // namespace

std::string Real::to_fixed(size_t sig) const {
    if (sig == 0) sig = 1;
    if (is_zero()) {
        return sig == 1 ? "0" : "0." + std::string(sig - 1, '0');
    }
    if (!is_finite()) return is_nan() ? "nan" : (sign() > 0 ? "inf" : "-inf");
    long exp10 = 0;
    bool neg = false;
    std::string digits = get_digits(v_, sig, exp10, neg);
    // mpfr may round up into an extra digit (e.g. 0.999.. -> "100"), which it
    // reports through the exponent; keep exactly `sig` digits.
    digits.resize(sig, '0');
    return place_point(digits, exp10, neg);
}

std::string Real::to_sci(size_t sig) const {
    if (sig == 0) sig = 1;
    if (is_zero()) return "0e+00";
    if (!is_finite()) return is_nan() ? "nan" : (sign() > 0 ? "inf" : "-inf");
    long exp10 = 0;
    bool neg = false;
    std::string digits = get_digits(v_, sig, exp10, neg);
    digits.resize(sig, '0');
    std::string mant(1, digits[0]);
    if (sig > 1) mant += "." + digits.substr(1);
    long e = exp10 - 1;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%+03ld", e);
    return (neg ? "-" : "") + mant + buf;
}

Real sqrt(const Real& x) { return x.sqrt(); }
Real abs(const Real& x) { return x.abs(); }

RealContext::RealContext(mpfr_prec_t precision_bits) : bits_(precision_bits) {
    if (precision_bits < 8) {
        throw std::invalid_argument("RealContext: precision must be at least 8 bits");
    }
}

const Real& RealContext::pi() const {
    if (!pi_cache_) {
        pi_cache_ = refpi::reference_pi(bits_);
    }
    return *pi_cache_;
}

Real RealContext::phi() const {
    Real r = Real::from_ui(5, bits_ + 32).sqrt();
    r += Real::from_ui(1, bits_ + 32);
    return r.mul_2si(-1).to_precision(bits_);
}

}  // namespace radixpi
