#pragma once

#include <gmpxx.h>

#include <string>

#include "radixpi/real.hpp"

namespace radixpi {

/// Exact rational coefficients; mpq_class keeps them canonical
/// (gcd-reduced, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string rational_to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// An element a + b*phi of the field Q(sqrt 5) on the basis {1, phi},
/// phi = (1 + sqrt 5)/2. Multiplication folds through phi^2 = phi + 1.
/// Representation is unique: two elements are equal iff both coefficient
/// pairs are equal, so equality is structural, never numeric.
///
/// Values are immutable after construction; operations may run concurrently
/// on shared elements.
class GoldenElement {
public:
    GoldenElement() : a_(0), b_(0) {}
    GoldenElement(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }
    GoldenElement(long a, long b) : GoldenElement(Rational(a), Rational(b)) {}

    const Rational& unit_part() const { return a_; }
    const Rational& phi_part() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    friend bool operator==(const GoldenElement& x, const GoldenElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenElement& x, const GoldenElement& y) { return !(x == y); }

    friend GoldenElement operator+(const GoldenElement& x, const GoldenElement& y);
    friend GoldenElement operator-(const GoldenElement& x, const GoldenElement& y);
    friend GoldenElement operator*(const GoldenElement& x, const GoldenElement& y);
    GoldenElement operator-() const { return {-a_, -b_}; }

    /// Galois conjugate (sqrt 5 -> -sqrt 5): a + b*phi -> (a + b) - b*phi.
    GoldenElement conjugate() const;

    /// Field norm a^2 + a*b - b^2 (product with the conjugate).
    Rational norm() const;

    /// Multiplicative inverse via conjugate/norm. Throws on zero.
    GoldenElement inverse() const;

    /// Numeric value a + b*(1 + sqrt 5)/2, correct within 2 ulp at the
    /// context precision.
    Real to_real(const RealContext& ctx) const;

    static GoldenElement phi() { return {0, 1}; }
    static GoldenElement one() { return {1, 0}; }

private:
    Rational a_;
    Rational b_;
};

/// True iff y*y equals x exactly.
bool is_square_of(const GoldenElement& x, const GoldenElement& y);

/// Serialization "a/b + c/d*phi" with canonical reduced rationals.
std::string to_string(const GoldenElement& x);
/// Parses the same grammar; whitespace is optional, denominators of 1 may be
/// omitted. Throws std::invalid_argument on malformed input.
GoldenElement parse_golden(const std::string& text);

}  // namespace radixpi
