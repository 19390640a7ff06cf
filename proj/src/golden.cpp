#include "radixpi/golden.hpp"

#include <cctype>
#include <stdexcept>

namespace radixpi {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    if (compact.empty()) throw std::invalid_argument("parse_rational: empty input");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), compact.c_str(), 10) != 0) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
    if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
    q.canonicalize();
    return q;
}

GoldenElement operator+(const GoldenElement& x, const GoldenElement& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
}

GoldenElement operator-(const GoldenElement& x, const GoldenElement& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
}

GoldenElement operator*(const GoldenElement& x, const GoldenElement& y) {
    // (a1 + b1 phi)(a2 + b2 phi), phi^2 = phi + 1:
    Rational unit = x.a_ * y.a_ + x.b_ * y.b_;
    Rational phi = x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_;
    return {std::move(unit), std::move(phi)};
}

GoldenElement GoldenElement::conjugate() const { return {a_ + b_, -b_}; }

Rational GoldenElement::norm() const {
    Rational n = a_ * a_ + a_ * b_ - b_ * b_;
    n.canonicalize();
    return n;
}

GoldenElement GoldenElement::inverse() const {
    if (is_zero()) throw std::domain_error("GoldenElement::inverse: division by zero");
    Rational n = norm();
    GoldenElement c = conjugate();
    return {c.a_ / n, c.b_ / n};
}

Real GoldenElement::to_real(const RealContext& ctx) const {
    mpfr_prec_t wide = ctx.precision_bits() + 32;
    Real phi = Real::from_ui(5, wide).sqrt();
    phi += Real::from_ui(1, wide);
    phi = phi.mul_2si(-1);
    Real v = Real::from_rational(a_, wide) + Real::from_rational(b_, wide) * phi;
    return v.to_precision(ctx.precision_bits());
}

bool is_square_of(const GoldenElement& x, const GoldenElement& y) { return y * y == x; }

std::string to_string(const GoldenElement& x) {
    return rational_to_string(x.unit_part()) + " + " + rational_to_string(x.phi_part()) + "*phi";
}

GoldenElement parse_golden(const std::string& text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    }
    // Grammar: <rational> "+" <rational> "*phi"
    size_t star = compact.rfind("*phi");
    if (star == std::string::npos || star + 4 != compact.size()) {
        throw std::invalid_argument("parse_golden: expected '<a> + <b>*phi' in '" + text + "'");
    }
    // The separating '+' is the first one past position 0; signs inside the
    // rationals are written '-'.
    size_t plus = compact.find('+', 1);
    if (plus == std::string::npos || plus >= star) {
        throw std::invalid_argument("parse_golden: expected '<a> + <b>*phi' in '" + text + "'");
    }
    Rational a = parse_rational(compact.substr(0, plus));
    Rational b = parse_rational(compact.substr(plus + 1, star - plus - 1));
    return {std::move(a), std::move(b)};
}

}  // namespace radixpi
