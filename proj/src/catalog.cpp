#include "radixpi/catalog.hpp"

#include <omp.h>

#include <map>
#include <sstream>
#include <stdexcept>

namespace radixpi::catalog {

namespace {

Real sqrt_ui_at(unsigned long v, mpfr_prec_t prec) { return Real::from_ui(v, prec).sqrt(); }

std::vector<FormulaSpec> build_registry() {
    std::vector<FormulaSpec> specs;

    auto rat = [](long n, long d) { return GoldenElement(Rational(n, d), Rational(0)); };

    FormulaSpec triangle;
    triangle.id = "eq10_triangle";
    triangle.mu = rat(3, 1);
    triangle.mu_text = "3";
    triangle.l1_sq_exact = GoldenElement(3, 0);
    triangle.l1_text = "sqrt(3)";
    triangle.alpha_text = "2*pi/3 (120 deg)";
    triangle.root_offset = 0;
    triangle.tag = "eq10";
    specs.push_back(triangle);

    FormulaSpec hexagon;
    hexagon.id = "eq10_hexagon";
    hexagon.mu = rat(6, 1);
    hexagon.mu_text = "6";
    hexagon.l1_sq_exact = GoldenElement(1, 0);
    hexagon.l1_text = "1";
    hexagon.alpha_text = "pi/3 (60 deg)";
    hexagon.root_offset = 1;
    hexagon.tag = "eq10";
    specs.push_back(hexagon);

    FormulaSpec dodecagon;
    dodecagon.id = "eq10_dodecagon";
    dodecagon.mu = rat(12, 1);
    dodecagon.mu_text = "12";
    dodecagon.l1_sq_eval = [](const RealContext& ctx) {
        mpfr_prec_t wide = ctx.precision_bits() + 16;
        return (2ul - sqrt_ui_at(3, wide)).to_precision(ctx.precision_bits());
    };
    dodecagon.l1_text = "(sqrt(6) - sqrt(2))/2";
    dodecagon.alpha_text = "pi/6 (30 deg)";
    dodecagon.root_offset = 2;
    dodecagon.tag = "eq10";
    specs.push_back(dodecagon);

    FormulaSpec square;
    square.id = "eq11";
    square.mu = rat(4, 1);
    square.mu_text = "4";
    square.l1_sq_exact = GoldenElement(2, 0);
    square.l1_text = "sqrt(2)";
    square.alpha_text = "pi/2 (90 deg)";
    square.root_offset = 1;
    square.tag = "eq11";
    specs.push_back(square);

    FormulaSpec arc135;
    arc135.id = "eq12";
    arc135.mu = rat(8, 3);
    arc135.mu_text = "8/3";
    arc135.l1_sq_eval = [](const RealContext& ctx) {
        mpfr_prec_t wide = ctx.precision_bits() + 16;
        return (sqrt_ui_at(2, wide) + 2ul).to_precision(ctx.precision_bits());
    };
    arc135.l1_text = "sqrt(2 + sqrt(2))";
    arc135.alpha_text = "3*pi/4 (135 deg)";
    arc135.root_offset = 2;
    arc135.tag = "eq12";
    specs.push_back(arc135);

    FormulaSpec arc150;
    arc150.id = "eq13";
    arc150.mu = rat(12, 5);
    arc150.mu_text = "12/5";
    arc150.l1_sq_eval = [](const RealContext& ctx) {
        mpfr_prec_t wide = ctx.precision_bits() + 16;
        return (sqrt_ui_at(3, wide) + 2ul).to_precision(ctx.precision_bits());
    };
    arc150.l1_text = "(sqrt(6) + sqrt(2))/2";
    arc150.alpha_text = "5*pi/6 (150 deg)";
    arc150.root_offset = 2;
    arc150.tag = "eq13";
    specs.push_back(arc150);

    FormulaSpec pentagon;
    pentagon.id = "eq14";
    pentagon.mu = rat(5, 1);
    pentagon.mu_text = "5";
    pentagon.l1_sq_exact = GoldenElement(3, -1);
    pentagon.l1_text = "sqrt(3 - phi)";
    pentagon.alpha_text = "2*pi/5 (72 deg)";
    pentagon.root_offset = 0;
    pentagon.tag = "eq14";
    specs.push_back(pentagon);

    FormulaSpec gnomon;
    gnomon.id = "eq15";
    gnomon.mu = rat(10, 3);
    gnomon.mu_text = "10/3";
    gnomon.l1_sq_exact = GoldenElement(1, 1);
    gnomon.l1_text = "phi";
    gnomon.alpha_text = "3*pi/5 (108 deg)";
    gnomon.root_offset = 1;
    gnomon.tag = "eq15";
    specs.push_back(gnomon);

    FormulaSpec diagonal;
    diagonal.id = "eq16";
    diagonal.mu = rat(5, 2);
    diagonal.mu_text = "5/2";
    diagonal.l1_sq_exact = GoldenElement(2, 1);
    diagonal.l1_text = "sqrt(2 + phi)";
    diagonal.alpha_text = "4*pi/5 (144 deg)";
    diagonal.root_offset = 1;
    diagonal.tag = "eq16";
    specs.push_back(diagonal);

    FormulaSpec golden_angle;
    golden_angle.id = "eq17";
    golden_angle.mu = GoldenElement(1, 1);  // phi^2 = 1 + phi
    golden_angle.mu_text = "phi^2";
    golden_angle.l1_sq_eval = [](const RealContext& ctx) {
        RealContext wide(ctx.precision_bits() + 32);
        Real phi = wide.phi();
        Real half_angle = wide.pi() / (phi * phi);
        return half_angle.sin().mul_2si(1).sqr().to_precision(ctx.precision_bits());
    };
    golden_angle.l1_text = "2*sin(pi/phi^2)";
    golden_angle.alpha_text = "2*pi/phi^2 (golden angle, ~137.5 deg)";
    golden_angle.root_offset = 1;
    golden_angle.tag = "eq17";
    golden_angle.note =
        "innermost radicand evaluated as 4 - l1^2; the display form's "
        "2*sqrt(1 - l1^2) is imaginary for l1 > 1";
    specs.push_back(golden_angle);

    // Registration-time sanity: mu > 2, integer mu >= 3, exact chords in (0, 4).
    RealContext probe(96);
    for (const auto& s : specs) {
        double mu = s.mu.to_real(probe).to_double();
        if (!(mu > 2.0)) throw std::logic_error("registry: mu must exceed 2 for " + s.id);
        if (s.mu.phi_part() == 0 && s.mu.unit_part().get_den() == 1 && mu < 3.0) {
            throw std::logic_error("registry: polygon entry needs mu >= 3 for " + s.id);
        }
        double l1sq = s.l1_sq(probe).to_double();
        if (!(l1sq > 0.0 && l1sq < 4.0)) {
            throw std::logic_error("registry: l1^2 outside (0, 4) for " + s.id);
        }
    }
    return specs;
}

}  // namespace

const std::vector<FormulaSpec>& all_formulas() {
    static const std::vector<FormulaSpec> registry = build_registry();
    return registry;
}

const FormulaSpec& get_formula(const std::string& id) {
    for (const auto& spec : all_formulas()) {
        if (spec.id == id) return spec;
    }
    throw UnknownFormulaError("unknown formula '" + id + "'");
}

std::vector<IdentityResult> verify_exact_identities(bool include_negative_control) {
    std::vector<IdentityResult> out;
    const GoldenElement phi = GoldenElement::phi();
    const GoldenElement one = GoldenElement::one();
    const GoldenElement phi_sq = phi * phi;

    auto check = [&out](std::string id, std::string statement, bool pass) {
        out.push_back({"exact", std::move(id), std::move(statement), pass,
                       pass ? "holds in Q(sqrt 5)" : "coefficient mismatch"});
    };

    check("phi-square", "phi^2 = phi + 1", phi_sq == phi + one);
    check("gnomon-complement", "4 - (3 - phi) = 1 + phi and sqrt(1 + phi) = phi",
          GoldenElement(4, 0) - GoldenElement(3, -1) == GoldenElement(1, 1) &&
              is_square_of(GoldenElement(1, 1), phi));
    check("diagonal-square", "phi^2 * (3 - phi) = 2 + phi",
          phi_sq * GoldenElement(3, -1) == GoldenElement(2, 1));
    check("gnomon-to-pentagon", "4 - phi^2 = 3 - phi",
          GoldenElement(4, 0) - phi_sq == GoldenElement(3, -1));
    check("diagonal-complement", "4 - (2 + phi) = 2 - phi",
          GoldenElement(4, 0) - GoldenElement(2, 1) == GoldenElement(2, -1));
    check("decagon-side-square", "(phi - 1)^2 = 2 - phi",
          is_square_of(GoldenElement(2, -1), GoldenElement(-1, 1)));
    check("rectangle-area", "(6/5)(1 + phi) = (6/5) phi^2",
          GoldenElement(Rational(6, 5), Rational(0)) * GoldenElement(1, 1) ==
              GoldenElement(Rational(6, 5), Rational(0)) * phi_sq);

    if (include_negative_control) {
        check("negative-control", "phi^2 * (3 - phi) = 2 + 2 phi (deliberately false)",
              phi_sq * GoldenElement(3, -1) == GoldenElement(2, 2));
    }
    return out;
}

std::vector<IdentityResult> verify_numeric_identities(const RealContext& ctx) {
    if (ctx.precision_bits() < 192) {
        throw std::invalid_argument("verify_numeric_identities: need at least 192 bits");
    }
    std::vector<IdentityResult> out;
    const mpfr_prec_t prec = ctx.precision_bits();
    const Real& pi = ctx.pi();
    Real phi = ctx.phi();
    Real tol = Real::from_ui(1, prec).mul_2si(-(static_cast<long>(prec) - 16));

    auto two_sin = [&](const Real& angle) { return angle.sin().mul_2si(1); };
    auto check = [&](std::string id, std::string statement, const Real& lhs, const Real& rhs) {
        Real residual = (lhs - rhs).abs();
        bool pass = residual <= tol;
        out.push_back({"numeric", std::move(id), std::move(statement), pass,
                       "residual " + residual.to_sci(3)});
    };

    check("pentagon-side", "(2 sin(pi/5))^2 = 3 - phi", two_sin(pi / 5ul).sqr(),
          GoldenElement(3, -1).to_real(ctx));
    check("gnomon-side", "2 sin(3 pi/10) = phi", two_sin(pi * 3ul / 10ul), phi);
    check("pentagon-diagonal", "(2 sin(2 pi/5))^2 = 2 + phi", two_sin(pi.mul_2si(1) / 5ul).sqr(),
          GoldenElement(2, 1).to_real(ctx));
    check("decagon-side", "2 sin(pi/10) = phi - 1", two_sin(pi / 10ul), phi - 1ul);
    check("dodecagon-side", "2 sin(pi/12) = (sqrt 6 - sqrt 2)/2", two_sin(pi / 12ul),
          (Real::from_ui(6, prec).sqrt() - Real::from_ui(2, prec).sqrt()).mul_2si(-1));
    check("arc150-chord", "2 sin(5 pi/12) = (sqrt 6 + sqrt 2)/2", two_sin(pi * 5ul / 12ul),
          (Real::from_ui(6, prec).sqrt() + Real::from_ui(2, prec).sqrt()).mul_2si(-1));
    return out;
}

Real series_chan(long terms, const RealContext& ctx) {
    if (terms < 1) throw std::domain_error("series_chan: need at least one term");
    const mpfr_prec_t work = ctx.precision_bits() + 32;
    RealContext wctx(work);
    Real phi = wctx.phi();
    Real phi2 = phi.sqr();
    Real phi3 = phi2 * phi;
    Real inv_2phi = 1ul / phi.mul_2si(1);

    std::vector<Real> term(static_cast<size_t>(terms));
#pragma omp parallel for schedule(static)
    for (long n = 0; n < terms; ++n) {
        unsigned long m = 5 * static_cast<unsigned long>(n);
        Real bracket = 1ul / Real::from_ui(m + 1, work);
        bracket += 1ul / (phi2 * (m + 2)).mul_2si(1);
        bracket -= 1ul / (phi3 * (m + 3)).mul_2si(2);
        bracket -= 1ul / (phi3 * (m + 4)).mul_2si(3);
        term[static_cast<size_t>(n)] = inv_2phi.pow_ui(m) * bracket;
    }
    Real sum = Real::from_ui(0, work);
    for (long n = terms - 1; n >= 0; --n) sum += term[static_cast<size_t>(n)];
    Real prefactor = 5ul * (phi + 2ul).sqrt() / phi.mul_2si(1);
    return (prefactor * sum).to_precision(ctx.precision_bits());
}

Real series_cloitre(long terms, const RealContext& ctx) {
    if (terms < 1) throw std::domain_error("series_cloitre: need at least one term");
    const mpfr_prec_t work = ctx.precision_bits() + 32;
    RealContext wctx(work);
    Real phi = wctx.phi();
    Real phi2 = phi.sqr();
    Real phi5 = phi2 * phi2 * phi;
    Real inv_phi = 1ul / phi;

    std::vector<Real> term(static_cast<size_t>(terms));
#pragma omp parallel for schedule(static)
    for (long k = 0; k < terms; ++k) {
        unsigned long m = 5 * static_cast<unsigned long>(k);
        auto inv_sq = [&](unsigned long j) { return 1ul / Real::from_ui(j, work).sqr(); };
        Real bracket = phi2 * inv_sq(m + 1);
        bracket -= phi * inv_sq(m + 2);
        bracket -= phi2 * inv_sq(m + 3);
        bracket += phi5 * inv_sq(m + 4);
        bracket += phi2.mul_2si(1) * inv_sq(m + 5);
        term[static_cast<size_t>(k)] = inv_phi.pow_ui(m) * bracket;
    }
    Real sum = Real::from_ui(0, work);
    for (long k = terms - 1; k >= 0; --k) sum += term[static_cast<size_t>(k)];
    return sum.to_precision(ctx.precision_bits());
}

GoldenElement dixon_constant() {
    return GoldenElement(Rational(6, 5), Rational(6, 5));
}

std::string registry_export() {
    std::ostringstream os;
    bool first = true;
    for (const auto& spec : all_formulas()) {
        if (!first) os << "\n";
        first = false;
        os << "formula: " << spec.id << "\n";
        os << "mu: " << spec.mu_text << "\n";
        os << "alpha: " << spec.alpha_text << "\n";
        os << "l1: " << spec.l1_text << "\n";
        if (spec.l1_sq_exact) {
            os << "l1_sq: " << to_string(*spec.l1_sq_exact) << "\n";
        }
        os << "root_offset: " << spec.root_offset << "\n";
        os << "tag: " << spec.tag << "\n";
        if (!spec.note.empty()) {
            os << "note: " << spec.note << "\n";
        }
    }
    return os.str();
}

}  // namespace radixpi::catalog
