#include <doctest.h>

#include "radixpi/catalog.hpp"
#include "radixpi/engine.hpp"
#include "radixpi/refpi.hpp"

using namespace radixpi;
using namespace radixpi::catalog;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("registry holds every formula with its exact parameters") {
    REQUIRE(all_formulas().size() == 10);
    CHECK_THROWS_AS(get_formula("nope"), UnknownFormulaError);

    struct Expect {
        const char* id;
        const char* mu;
        int root_offset;
    };
    for (const Expect& e : {Expect{"eq10_triangle", "3", 0}, Expect{"eq10_hexagon", "6", 1},
                            Expect{"eq10_dodecagon", "12", 2}, Expect{"eq11", "4", 1},
                            Expect{"eq12", "8/3", 2}, Expect{"eq13", "12/5", 2},
                            Expect{"eq14", "5", 0}, Expect{"eq15", "10/3", 1},
                            Expect{"eq16", "5/2", 1}, Expect{"eq17", "phi^2", 1}}) {
        const FormulaSpec& spec = get_formula(e.id);
        CHECK(spec.mu_text == e.mu);
        CHECK(spec.root_offset == e.root_offset);
    }

    CHECK(get_formula("eq14").l1_sq_exact == GoldenElement(3, -1));
    CHECK(get_formula("eq15").l1_sq_exact == GoldenElement(1, 1));
    CHECK(get_formula("eq16").l1_sq_exact == GoldenElement(2, 1));
    CHECK(get_formula("eq17").mu == GoldenElement(1, 1));
    CHECK(get_formula("eq11").l1_sq_exact == GoldenElement(2, 0));
    CHECK_FALSE(get_formula("eq10_dodecagon").l1_sq_exact.has_value());

    RealContext ctx(192);
    CHECK(get_formula("eq10_dodecagon").l1_sq(ctx).to_fixed(16) == "0.2679491924311227");
    CHECK(get_formula("eq12").l1_sq(ctx).to_fixed(16) == "3.414213562373095");
    CHECK(get_formula("eq13").l1_sq(ctx).to_fixed(16) == "3.732050807568877");
    CHECK(get_formula("eq17").l1(ctx).to_fixed(16) == "1.864064847626455");
}

TEST_CASE("exact identities all hold, the negative control fails") {
    auto results = verify_exact_identities();
    REQUIRE(results.size() == 7);
    for (const auto& r : results) {
        CHECK(r.pass);
    }
    auto with_control = verify_exact_identities(true);
    REQUIRE(with_control.size() == 8);
    CHECK(with_control.back().id == "negative-control");
    CHECK_FALSE(with_control.back().pass);
    for (size_t i = 0; i + 1 < with_control.size(); ++i) CHECK(with_control[i].pass);
}

TEST_CASE("numeric identities hold to at least 50 decimal digits at 256 bits") {
    RealContext ctx(256);
    auto results = verify_numeric_identities(ctx);
    REQUIRE(results.size() == 6);
    for (const auto& r : results) {
        CHECK(r.pass);
    }
    // re-verify the headline equality directly with a 1e-50 yardstick
    Real lhs = (ctx.pi() / 5ul).sin().mul_2si(1).sqr();
    Real rhs = GoldenElement(3, -1).to_real(ctx);
    CHECK((lhs - rhs).abs() < Real::from_string("1e-50", 64));

    RealContext narrow(128);
    CHECK_THROWS_AS(verify_numeric_identities(narrow), std::invalid_argument);
}

TEST_CASE("phi series for pi matches its target as printed") {
    RealContext ctx(256);
    Real one_term = series_chan(1, ctx);
    CHECK(one_term.to_fixed(5) == "3.1401");
    CHECK((one_term - Real::from_string("3.140072390947431226", 256)).abs() <
          Real::from_string("1e-15", 64));
    // geometric tail bound: ratio (2 phi)^-5 per term
    Real step = (series_chan(2, ctx) - one_term).abs();
    Real bound = 3ul / ctx.phi().mul_2si(1).pow_ui(5);
    CHECK(step < bound);
    // 40 terms pin pi to far beyond 50 digits
    CHECK((series_chan(40, ctx) - ctx.pi()).abs() < Real::from_string("1e-50", 64));
}

TEST_CASE("phi-weighted series for pi^2/50 as printed misses its target") {
    RealContext ctx(256);
    Real sum30 = series_cloitre(30, ctx);
    CHECK(sum30.to_fixed(30) == "2.84280881432249735987657295356");
    Real target = ctx.pi().sqr() / 50ul;
    CHECK(target.to_fixed(20) == "0.19739208802178717238");
    // the printed coefficients do not sum to pi^2/50; the deviation is O(1)
    CHECK((sum30 - target).abs() > ctx.make_ui(2));
    // but the series itself converges geometrically
    for (long t : {5l, 10l, 20l}) {
        Real diff = (series_cloitre(t + 1, ctx) - series_cloitre(t, ctx)).abs();
        Real tail_bound = 10ul / ctx.phi().pow_ui(static_cast<unsigned long>(5 * t));
        CHECK(diff < tail_bound);
    }
    CHECK(series_cloitre(1, ctx).sign() > 0);
    CHECK_THROWS_AS(series_cloitre(0, ctx), std::domain_error);
    CHECK_THROWS_AS(series_chan(0, ctx), std::domain_error);
}

TEST_CASE("rectangle-area constant") {
    GoldenElement d = dixon_constant();
    CHECK(d == GoldenElement(Rational(6, 5), Rational(6, 5)));
    RealContext ctx(128);
    CHECK(d.to_real(ctx).to_fixed(20) == "3.1416407864998738178");
    RealContext wide(256);
    Real diff = d.to_real(wide) - wide.pi();
    CHECK(diff.sign() > 0);
    CHECK(diff.to_sci(10) == "4.813291008e-05");
    CHECK(diff < Real::from_string("5e-5", 64));
}

TEST_CASE("all pi formulas agree digit for digit at 60 digits") {
    std::string reference = refpi::pi_digits(60);
    for (const char* id : {"eq10_hexagon", "eq11", "eq14", "eq15", "eq16", "eq17"}) {
        REQUIRE(engine::compute_pi(get_formula(id), 60).digits == reference);
    }
}

TEST_CASE("pentagon and decagon chains interleave") {
    RealContext ctx(256);
    FormulaSpec decagon;
    decagon.id = "decagon";
    decagon.mu = GoldenElement(10, 0);
    decagon.mu_text = "10";
    decagon.l1_sq_exact = GoldenElement(2, -1);
    decagon.l1_text = "sqrt(2 - phi)";
    decagon.alpha_text = "pi/5 (36 deg)";
    decagon.root_offset = 1;
    decagon.tag = "decagon";

    // one doubling of the decagon side has squared length 2 - sqrt(2 + phi)
    Real c1 = engine::chord_double_stable(decagon.l1(ctx), ctx);
    Real expect = 2ul - GoldenElement(2, 1).to_real(ctx).sqrt();
    CHECK((c1.sqr() - expect).abs() <= Real::from_ui(1, 64).mul_2si(-246));

    // the pentagon chain doubled once lands on the decagon chain, so the
    // mu-weighted estimates coincide: 5*2^k*c(pent,k+1) = 10*2^(k-1)*c(dec,k)
    const FormulaSpec& pentagon = get_formula("eq14");
    auto pent = engine::chord_chain(pentagon, 21, ctx);
    auto dec = engine::chord_chain(decagon, 20, ctx);
    Real tol = Real::from_ui(1, 64).mul_2si(-240);
    for (long k = 0; k <= 20; ++k) {
        Real lhs = (5ul * pent[k + 1].chord).mul_2si(k);
        Real rhs = (10ul * dec[k].chord).mul_2si(k - 1);
        REQUIRE((lhs - rhs).abs() <= tol);
    }
}

TEST_CASE("registry export is a stable key-value document") {
    std::string doc = registry_export();
    CHECK(doc.find("formula: eq14\nmu: 5\nalpha: 2*pi/5 (72 deg)\nl1: sqrt(3 - phi)\n"
                   "l1_sq: 3/1 + -1/1*phi\nroot_offset: 0\ntag: eq14\n") != std::string::npos);
    CHECK(doc.find("formula: eq15\nmu: 10/3\n") != std::string::npos);
    CHECK(doc.find("formula: eq16\nmu: 5/2\n") != std::string::npos);
    CHECK(doc.find("formula: eq17\nmu: phi^2\n") != std::string::npos);
    CHECK(doc.find("note: innermost radicand evaluated as 4 - l1^2") != std::string::npos);
    size_t blocks = 0;
    size_t pos = 0;
    while ((pos = doc.find("formula: ", pos)) != std::string::npos) {
        ++blocks;
        pos += 1;
    }
    CHECK(blocks == 10);
}

TEST_SUITE_END();
