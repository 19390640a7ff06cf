#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "radixpi/geometry.hpp"

using namespace radixpi;
using namespace radixpi::geom;

namespace {

Point pt(const RealContext& ctx, double x, double y, std::string label = "") {
    return {ctx.make_double(x), ctx.make_double(y), std::move(label)};
}

Real tolerance_bits(long bits) { return Real::from_ui(1, 64).mul_2si(-bits); }

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("line intersections") {
    RealContext ctx(128);
    Line x_axis{pt(ctx, 0, 0), pt(ctx, 1, 0)};
    Line y_axis{pt(ctx, 0, 0), pt(ctx, 0, 1)};
    auto origin = intersect_lines(x_axis, y_axis, ctx);
    CHECK(origin.point.x.is_zero());
    CHECK(origin.point.y.is_zero());
    CHECK_FALSE(origin.ill_conditioned);

    Line diag{pt(ctx, 0, 0), pt(ctx, 1, 1)};
    Line anti{pt(ctx, 0, 2), pt(ctx, 1, 1)};
    auto one_one = intersect_lines(diag, anti, ctx);
    CHECK((one_one.point.x - 1ul).abs() <= tolerance_bits(120));
    CHECK((one_one.point.y - 1ul).abs() <= tolerance_bits(120));

    Line parallel{pt(ctx, 0, 1), pt(ctx, 1, 2)};
    CHECK_THROWS_AS(intersect_lines(diag, parallel, ctx), std::domain_error);
}

TEST_CASE("near-parallel intersections carry a conditioning warning") {
    RealContext ctx(128);
    Line x_axis{pt(ctx, 0, 0), pt(ctx, 1, 0)};
    // a line meeting the axis at ~1e-6 rad
    Line shallow{pt(ctx, 0, 1), pt(ctx, 1000000, 0)};
    auto res = intersect_lines(x_axis, shallow, ctx);
    CHECK(res.ill_conditioned);

    Line steep{pt(ctx, 0, 1), pt(ctx, 10, 0)};
    CHECK_FALSE(intersect_lines(x_axis, steep, ctx).ill_conditioned);

    // perturbation bound: moving the shallow line by delta moves the
    // intersection by about delta / sin(angle) = 1e6 delta
    Real delta = Real::from_ui(1, 128).mul_2si(-90);
    Line shifted{{ctx.make_ui(0), ctx.make_double(1.0) + delta, ""},
                 {ctx.make_double(1000000.0), delta, ""}};
    Real moved = (intersect_lines(x_axis, shifted, ctx).point.x -
                  intersect_lines(x_axis, shallow, ctx).point.x)
                     .abs();
    CHECK(moved > delta * 100000ul);
}

TEST_CASE("line-circle intersections with tangency window") {
    RealContext ctx(128);
    Circle unit{pt(ctx, 0, 0), ctx.make_ui(1)};
    Line vertical{pt(ctx, 0, -2), pt(ctx, 0, 2)};
    auto two = intersect_line_circle(vertical, unit, ctx);
    REQUIRE(two.size() == 2);
    CHECK((two[0].y + 1ul).abs() <= tolerance_bits(120));  // sorted by parameter
    CHECK((two[1].y - 1ul).abs() <= tolerance_bits(120));

    Line tangent{pt(ctx, -1, 1), pt(ctx, 1, 1)};
    auto one = intersect_line_circle(tangent, unit, ctx);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x.abs() <= tolerance_bits(100));
    CHECK((one[0].y - 1ul).abs() <= tolerance_bits(100));

    Line outside{pt(ctx, -1, 2), pt(ctx, 1, 2)};
    CHECK(intersect_line_circle(outside, unit, ctx).empty());
}

TEST_CASE("circle-circle intersections") {
    RealContext ctx(128);
    Circle a{pt(ctx, 0, 0), ctx.make_ui(1)};
    Circle b{pt(ctx, 1, 0), ctx.make_ui(1)};
    auto two = intersect_circles(a, b, ctx);
    REQUIRE(two.size() == 2);
    Real half = ctx.make_double(0.5);
    Real root3_2 = ctx.make_ui(3).sqrt().mul_2si(-1);
    CHECK((two[0].x - half).abs() <= tolerance_bits(120));
    CHECK((two[0].y + root3_2).abs() <= tolerance_bits(120));  // lexicographic order
    CHECK((two[1].y - root3_2).abs() <= tolerance_bits(120));

    Circle c{pt(ctx, 2, 0), ctx.make_ui(1)};
    auto tangent = intersect_circles(a, c, ctx);
    REQUIRE(tangent.size() == 1);
    CHECK((tangent[0].x - 1ul).abs() <= tolerance_bits(100));

    Circle d{pt(ctx, 3, 0), ctx.make_ui(1)};
    CHECK(intersect_circles(a, d, ctx).empty());

    CHECK_THROWS_AS(intersect_circles(a, Circle{pt(ctx, 0, 0), ctx.make_ui(1)}, ctx),
                    std::domain_error);
    CHECK(intersect_circles(a, Circle{pt(ctx, 0, 0), ctx.make_ui(2)}, ctx).empty());
}

TEST_CASE("segment division by ray and parallels") {
    RealContext ctx(192);
    ConstructionTrace trace;
    auto cuts = divide_segment(pt(ctx, 0, 0, "p"), pt(ctx, 1, 0, "q"), 5, ctx, &trace);
    REQUIRE(cuts.size() == 4);
    for (int i = 1; i <= 4; ++i) {
        Real expected = Real::from_rational(mpq_class(i, 5), 192);
        REQUIRE((cuts[i - 1].x - expected).abs() <= tolerance_bits(186));
        REQUIRE(cuts[i - 1].y.abs() <= tolerance_bits(186));
    }
    CHECK(trace.steps().size() > 10);  // the auxiliary construction is recorded

    auto mid = divide_segment(pt(ctx, 0, 0), pt(ctx, 0, 2), 2, ctx);
    REQUIRE(mid.size() == 1);
    CHECK((mid[0].y - 1ul).abs() <= tolerance_bits(186));

    // (1 + phi)/5 via the exact field
    Real len = GoldenElement(1, 1).to_real(ctx);
    auto golden = divide_segment(pt(ctx, 0, 0), Point{len, ctx.make_ui(0), ""}, 5, ctx);
    Real first = GoldenElement(Rational(1, 5), Rational(1, 5)).to_real(ctx);
    CHECK((golden[0].x - first).abs() <= tolerance_bits(186));
    CHECK(first.to_fixed(18) == "0.523606797749978970");

    CHECK_THROWS_AS(divide_segment(pt(ctx, 1, 1), pt(ctx, 1, 1), 5, ctx), std::domain_error);
    CHECK_THROWS_AS(divide_segment(pt(ctx, 0, 0), pt(ctx, 1, 0), 1, ctx), std::domain_error);
}

TEST_CASE("geometric mean by semicircle") {
    RealContext ctx(256);
    Point m = geometric_mean_point(pt(ctx, 0, 0, "a"), pt(ctx, 4, 0, "b"), pt(ctx, 1, 0, "f"), ctx);
    CHECK((m.x - 1ul).abs() <= tolerance_bits(246));
    CHECK((m.y - ctx.make_ui(3).sqrt()).abs() <= tolerance_bits(246));
    Real am = distance(pt(ctx, 0, 0), m);
    CHECK((am - 2ul).abs() <= tolerance_bits(246));

    // |aM| = sqrt((6/5)(1 + phi)) when |ab| = (6/5)(1 + phi) and |a foot| = 1
    Real ab = GoldenElement(Rational(6, 5), Rational(6, 5)).to_real(ctx);
    Point m2 = geometric_mean_point(pt(ctx, 0, 0), Point{ab, ctx.make_ui(0), ""},
                                    pt(ctx, 1, 0), ctx);
    Real am2 = distance(pt(ctx, 0, 0), m2);
    CHECK((am2 - ab.sqrt()).abs() <= tolerance_bits(246));
    CHECK(am2.to_fixed(15) == "1.77246742889676");

    // degenerate foot at b: M collapses onto b
    Point mb = geometric_mean_point(pt(ctx, 0, 0), pt(ctx, 1, 0), pt(ctx, 1, 0), ctx);
    CHECK((mb.x - 1ul).abs() <= tolerance_bits(246));
    CHECK(mb.y.abs() <= tolerance_bits(246));

    CHECK_THROWS_AS(
        geometric_mean_point(pt(ctx, 0, 0), pt(ctx, 4, 0), pt(ctx, 1, 1), ctx),
        std::domain_error);
    CHECK_THROWS_AS(
        geometric_mean_point(pt(ctx, 0, 0), pt(ctx, 4, 0), pt(ctx, 5, 0), ctx),
        std::domain_error);
}

TEST_CASE("square-on-mean construction hits the rectangle-area constant") {
    RealContext ctx(128);
    ConstructionTrace trace = run_dixon(ctx);
    Real area(8), err(8), side(8);
    for (const auto& [name, value] : trace.finals()) {
        if (name == "area") area = value;
        if (name == "area_error_vs_pi") err = value;
        if (name == "side_AM") side = value;
    }
    CHECK(area.to_fixed(20) == "3.1416407864998738178");
    CHECK(err < Real::from_string("5e-5", 64));
    CHECK(err > Real::from_string("4e-5", 64));
    Real exact = catalog::dixon_constant().to_real(ctx);
    CHECK((area - exact).abs() <= area.ulp() * 8ul);
    CHECK((side - exact.sqrt()).abs() <= side.ulp() * 8ul);
    CHECK_THROWS_AS(run_dixon(RealContext(64)), std::invalid_argument);
}

TEST_CASE("rectangle construction agrees with the square construction") {
    RealContext ctx(128);
    ConstructionTrace trace = run_pi_rectangle(ctx);
    Real area(8), err(8), on(8), ol(8);
    for (const auto& [name, value] : trace.finals()) {
        if (name == "area") area = value;
        if (name == "area_error_vs_pi") err = value;
        if (name == "side_ON") on = value;
        if (name == "side_OL") ol = value;
    }
    CHECK(on.to_fixed(20) == "1.6180339887498948482");
    CHECK(ol.to_fixed(20) == "1.9416407864998738178");
    CHECK(err < Real::from_string("5e-5", 64));
    Real exact = catalog::dixon_constant().to_real(ctx);
    CHECK((area - exact).abs() <= area.ulp() * 8ul);

    ConstructionTrace square = run_dixon(ctx);
    Real square_area(8);
    for (const auto& [name, value] : square.finals()) {
        if (name == "area") square_area = value;
    }
    CHECK((area - square_area).abs() <= area.ulp() * 8ul);
}

TEST_CASE("scaling the starting circle scales lengths and leaves the relative error") {
    RealContext ctx(128);
    auto rel_error = [&](const ConstructionTrace& t, const Real& s) {
        Real area(8);
        for (const auto& [name, value] : t.finals()) {
            if (name == "area") area = value;
        }
        return (area / (s.sqr() * ctx.pi()) - 1ul).abs();
    };
    ConstructionTrace base = run_pi_rectangle(ctx);
    Real base_rel = rel_error(base, ctx.make_ui(1));
    Real base_ol(8);
    for (const auto& [name, value] : base.finals()) {
        if (name == "side_OL") base_ol = value;
    }
    for (double s : {0.5, 2.0, 3.0}) {
        Real scale = ctx.make_double(s);
        ConstructionTrace scaled = run_pi_rectangle(ctx, scale);
        Real ol(8);
        for (const auto& [name, value] : scaled.finals()) {
            if (name == "side_OL") ol = value;
        }
        REQUIRE((ol - scale * base_ol).abs() <= ol.ulp() * 4ul);
        Real rel = rel_error(scaled, scale);
        REQUIRE((rel - base_rel).abs() <= Real::from_ui(1, 64).mul_2si(1 - 128).mul_2si(1));
    }
}

TEST_CASE("inscribed chord fan satisfies the segment relations") {
    RealContext ctx(256);
    auto results = verify_figure2_relations(ctx);
    REQUIRE(results.size() == 10);
    for (const auto& r : results) {
        INFO(r.id, ": ", r.detail);
        REQUIRE(r.pass);
    }
    RealContext narrow(128);
    CHECK_THROWS_AS(verify_figure2_relations(narrow), std::invalid_argument);
}

TEST_CASE("trace bookkeeping is append-only and label-sound") {
    RealContext ctx(128);
    ConstructionTrace t;
    CHECK_THROWS_AS(t.step("line", {"ghost"}, {}), std::logic_error);
    t.given(pt(ctx, 0, 0, "O"));
    CHECK(t.has_label("O"));
    CHECK_THROWS_AS(t.step("line", {"O", "ghost"}, {}), std::logic_error);
    t.step("circle", {"O"}, {}, {"C"});
    CHECK(t.has_label("C"));
    CHECK_THROWS_AS(t.point("C"), std::out_of_range);

    ConstructionTrace dixon = run_dixon(ctx);
    // every consumed label was produced earlier: step() enforces it during
    // construction, so a completed trace replays cleanly
    std::string text = dixon.to_text();
    CHECK(text.find("step 1: given -> O [0") == 0);
    CHECK(text.find("final area = 3.1416407864998738178") != std::string::npos);
    CHECK(dixon.point("M").label == "M");
}

TEST_CASE("svg diagram emission") {
    RealContext ctx(128);
    ConstructionTrace trace = run_pi_rectangle(ctx);
    std::string path = "test_diagram_out.svg";
    write_svg(trace, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(body.find("<svg") == 0);
    CHECK(body.find("<circle") != std::string::npos);
    CHECK(body.find("<line") != std::string::npos);
    CHECK(body.rfind("</svg>\n") == body.size() - 7);
    in.close();
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_svg(trace, "/nonexistent_dir_xyz/out.svg"), IoError);
}

TEST_SUITE_END();
