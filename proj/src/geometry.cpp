#include "radixpi/geometry.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "radixpi/golden.hpp"

namespace radixpi::geom {

namespace {

std::string fmt20(const Real& v) { return v.to_fixed(20); }

Real rel_tolerance(const RealContext& ctx) {
    return Real::from_ui(1, ctx.precision_bits())
        .mul_2si(-(static_cast<long>(ctx.precision_bits()) - 16));
}

Point at(Real x, Real y, std::string label = "") { return {std::move(x), std::move(y), std::move(label)}; }

Point lifted(const Point& p, mpfr_prec_t prec, std::string label = "") {
    return {p.x.to_precision(prec), p.y.to_precision(prec),
            label.empty() ? p.label : std::move(label)};
}

const Point& nearest_to(const std::vector<Point>& cands, const Real& x, const Real& y) {
    if (cands.empty()) throw std::logic_error("construction lost an expected intersection");
    size_t best = 0;
    Real best_d2 = (cands[0].x - x).sqr() + (cands[0].y - y).sqr();
    for (size_t i = 1; i < cands.size(); ++i) {
        Real d2 = (cands[i].x - x).sqr() + (cands[i].y - y).sqr();
        if (d2 < best_d2) {
            best = i;
            best_d2 = d2;
        }
    }
    return cands[best];
}

const Point& upper_of(const std::vector<Point>& cands) {
    if (cands.empty()) throw std::logic_error("construction lost an expected intersection");
    size_t best = 0;
    for (size_t i = 1; i < cands.size(); ++i) {
        if (cands[i].y > cands[best].y ||
            (cands[i].y == cands[best].y && cands[i].x > cands[best].x)) {
            best = i;
        }
    }
    return cands[best];
}

}  // namespace

void ConstructionTrace::require_known(const std::string& label) const {
    if (!has_label(label)) {
        throw std::logic_error("trace step consumes unknown label '" + label + "'");
    }
}

void ConstructionTrace::register_label(const std::string& label) {
    if (!has_label(label)) known_.push_back(label);
}

void ConstructionTrace::given(const Point& p) {
    if (p.label.empty()) throw std::logic_error("givens need a label");
    register_label(p.label);
    points_.push_back(p);
    Step s;
    s.index = static_cast<int>(steps_.size()) + 1;
    s.op = "given";
    s.outputs = {p.label};
    s.coords = fmt20(p.x) + " " + fmt20(p.y);
    steps_.push_back(std::move(s));
}

void ConstructionTrace::step(const std::string& op, const std::vector<std::string>& inputs,
                             const std::vector<Point>& out_points,
                             const std::vector<std::string>& out_other) {
    for (const auto& in : inputs) require_known(in);
    Step s;
    s.index = static_cast<int>(steps_.size()) + 1;
    s.op = op;
    s.inputs = inputs;
    std::string coords;
    for (const auto& p : out_points) {
        if (p.label.empty()) throw std::logic_error("trace outputs need labels");
        register_label(p.label);
        points_.push_back(p);
        s.outputs.push_back(p.label);
        if (!coords.empty()) coords += "; ";
        coords += fmt20(p.x) + " " + fmt20(p.y);
    }
    for (const auto& other : out_other) {
        register_label(other);
        s.outputs.push_back(other);
    }
    s.coords = coords;
    steps_.push_back(std::move(s));
}

void ConstructionTrace::warn_last(const std::string& text) {
    if (steps_.empty()) throw std::logic_error("no step to warn about");
    steps_.back().warning = text;
}

void ConstructionTrace::set_final(const std::string& name, const Real& value) {
    finals_.emplace_back(name, value);
}

void ConstructionTrace::attach_circle(const std::string& label, const Circle& c) {
    circles_.push_back(
        {label, c.center.x.to_double(), c.center.y.to_double(), c.radius.to_double()});
}

void ConstructionTrace::attach_segment(const std::string& label, const Point& a, const Point& b) {
    segments_.push_back(
        {label, a.x.to_double(), a.y.to_double(), b.x.to_double(), b.y.to_double()});
}

bool ConstructionTrace::has_label(const std::string& label) const {
    return std::find(known_.begin(), known_.end(), label) != known_.end();
}

const Point& ConstructionTrace::point(const std::string& label) const {
    for (const auto& p : points_) {
        if (p.label == label) return p;
    }
    throw std::out_of_range("no point labelled '" + label + "' in trace");
}

std::string ConstructionTrace::to_text() const {
    std::ostringstream os;
    for (const auto& s : steps_) {
        os << "step " << s.index << ": " << s.op;
        for (const auto& in : s.inputs) os << " " << in;
        os << " ->";
        for (const auto& out : s.outputs) os << " " << out;
        if (!s.coords.empty()) os << " [" << s.coords << "]";
        if (!s.warning.empty()) os << " ! " << s.warning;
        os << "\n";
    }
    for (const auto& [name, value] : finals_) {
        os << "final " << name << " = " << value.to_fixed(20) << "\n";
    }
    return os.str();
}

Real distance(const Point& p, const Point& q) {
    return ((p.x - q.x).sqr() + (p.y - q.y).sqr()).sqrt();
}

LineIntersection intersect_lines(const Line& l1, const Line& l2, const RealContext& ctx) {
    Real d1x = l1.b.x - l1.a.x, d1y = l1.b.y - l1.a.y;
    Real d2x = l2.b.x - l2.a.x, d2y = l2.b.y - l2.a.y;
    Real cross = d1x * d2y - d1y * d2x;
    Real scale = (d1x.sqr() + d1y.sqr()).sqrt() * (d2x.sqr() + d2y.sqr()).sqrt();
    if (cross.abs() <= scale * rel_tolerance(ctx)) {
        throw std::domain_error("intersect_lines: parallel lines");
    }
    // t along l1 solving l1.a + t d1 = l2.a + s d2.
    Real rx = l2.a.x - l1.a.x, ry = l2.a.y - l1.a.y;
    Real t = (rx * d2y - ry * d2x) / cross;
    LineIntersection res;
    res.point = at(l1.a.x + t * d1x, l1.a.y + t * d1y);
    Real sin_angle = cross.abs() / scale;
    Real warn_at = Real::from_ui(1, ctx.precision_bits())
                       .mul_2si(-static_cast<long>(ctx.precision_bits() / 8));
    res.ill_conditioned = sin_angle < warn_at;
    return res;
}

std::vector<Point> intersect_line_circle(const Line& l, const Circle& c, const RealContext& ctx) {
    Real dx = l.b.x - l.a.x, dy = l.b.y - l.a.y;
    Real fx = l.a.x - c.center.x, fy = l.a.y - c.center.y;
    Real qa = dx.sqr() + dy.sqr();
    Real qb = (fx * dx + fy * dy).mul_2si(1);
    Real qc = fx.sqr() + fy.sqr() - c.radius.sqr();
    Real disc = qb.sqr() - (qa * qc).mul_2si(2);
    Real span = qb.sqr() + (qa * qc).abs().mul_2si(2);
    Real tol = span.is_zero() ? Real::from_ui(0, ctx.precision_bits()) : span.ulp().mul_2si(2);

    std::vector<Point> out;
    auto point_at = [&](const Real& t) { return at(l.a.x + t * dx, l.a.y + t * dy); };
    if (disc > tol) {
        Real root = disc.sqrt();
        Real two_a = qa.mul_2si(1);
        out.push_back(point_at((-qb - root) / two_a));
        out.push_back(point_at((-qb + root) / two_a));
        // already sorted by parameter: qa > 0
    } else if (disc >= -tol) {
        out.push_back(point_at(-qb / qa.mul_2si(1)));
    }
    return out;
}

std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2, const RealContext& ctx) {
    Real dx = c2.center.x - c1.center.x, dy = c2.center.y - c1.center.y;
    Real d2 = dx.sqr() + dy.sqr();
    Real pos_tol = rel_tolerance(ctx) * (c1.radius > c2.radius ? c1.radius : c2.radius);
    if (d2.sqrt() <= pos_tol) {
        if ((c1.radius - c2.radius).abs() <= pos_tol) {
            throw std::domain_error("intersect_circles: coincident circles");
        }
        return {};  // concentric
    }
    // Distance u from c1 along the center line to the radical foot.
    Real u = (d2 + c1.radius.sqr() - c2.radius.sqr()).mul_2si(-1);
    Real h2 = c1.radius.sqr() - u.sqr() / d2;
    Real span = c1.radius.sqr() + (u.sqr() / d2);
    Real tol = span.ulp().mul_2si(2);
    Real fx = c1.center.x + u * dx / d2;
    Real fy = c1.center.y + u * dy / d2;
    std::vector<Point> out;
    if (h2 > tol) {
        Real h = h2.sqrt();
        Real inv_d = 1ul / d2.sqrt();
        Real px = -dy * h * inv_d, py = dx * h * inv_d;
        out.push_back(at(fx + px, fy + py));
        out.push_back(at(fx - px, fy - py));
        std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) {
            if (a.x != b.x) return a.x < b.x;
            return a.y < b.y;
        });
    } else if (h2 >= -tol) {
        out.push_back(at(fx, fy));
    }
    return out;
}

namespace {

// Shared machinery for the scripted constructions. All geometry runs at the
// caller precision + 32 guard bits; results round back at the end.
struct Builder {
    RealContext wide;
    ConstructionTrace trace;
    int auto_id = 0;

    explicit Builder(const RealContext& ctx) : wide(ctx.precision_bits() + 32) {}

    std::string fresh(const std::string& stem) { return stem + std::to_string(++auto_id); }

    Point given(Real x, Real y, const std::string& label) {
        Point p = at(std::move(x), std::move(y), label);
        trace.given(p);
        return p;
    }

    Line line(const Point& p, const Point& q, const std::string& label) {
        trace.step("line", {p.label, q.label}, {}, {label});
        trace.attach_segment(label, p, q);
        return {p, q};
    }

    // circle centered at `center` through `through`
    Circle circle(const Point& center, const Point& through, const std::string& label) {
        trace.step("circle", {center.label, through.label}, {}, {label});
        Circle c{center, distance(center, through)};
        trace.attach_circle(label, c);
        return c;
    }

    // compass transfer: circle centered at `center` with radius |p q|
    Circle compass(const Point& center, const Point& p, const Point& q, const std::string& label) {
        trace.step("compass", {center.label, p.label, q.label}, {}, {label});
        Circle c{center, distance(p, q)};
        trace.attach_circle(label, c);
        return c;
    }

    Point pick_line_circle(const Line& l, const std::string& l_label, const Circle& c,
                           const std::string& c_label, const Real& ex, const Real& ey,
                           const std::string& out) {
        auto cands = intersect_line_circle(l, c, wide);
        Point p = nearest_to(cands, ex, ey);
        p.label = out;
        trace.step("intersect_line_circle", {l_label, c_label}, {p});
        return p;
    }

    Point pick_circles(const Circle& a, const std::string& a_label, const Circle& b,
                       const std::string& b_label, const Real& ex, const Real& ey,
                       const std::string& out) {
        auto cands = intersect_circles(a, b, wide);
        Point p = nearest_to(cands, ex, ey);
        p.label = out;
        trace.step("intersect_circles", {a_label, b_label}, {p});
        return p;
    }

    Point cross_lines(const Line& a, const std::string& a_label, const Line& b,
                      const std::string& b_label, const std::string& out) {
        LineIntersection res = intersect_lines(a, b, wide);
        res.point.label = out;
        trace.step("intersect_lines", {a_label, b_label}, {res.point});
        if (res.ill_conditioned) trace.warn_last("near-parallel intersection");
        return res.point;
    }

    // Perpendicular bisector of p and q (two arcs and the line through them).
    Line bisector(const Point& p, const Point& q, const std::string& label) {
        std::string ca = fresh("arc"), cb = fresh("arc");
        Circle c1 = circle(p, q, ca);
        Circle c2 = circle(q, p, cb);
        auto cands = intersect_circles(c1, c2, wide);
        if (cands.size() != 2) throw std::logic_error("bisector arcs failed to cross");
        Point u = cands[0], v = cands[1];
        u.label = fresh("bis");
        v.label = fresh("bis");
        trace.step("intersect_circles", {ca, cb}, {u, v});
        return line(u, v, label);
    }

    Point midpoint(const Point& p, const Point& q, const Line& through,
                   const std::string& through_label, const std::string& out) {
        std::string bl = fresh("bisect");
        Line bis = bisector(p, q, bl);
        return cross_lines(bis, bl, through, through_label, out);
    }
};

}  // namespace

std::vector<Point> divide_segment(const Point& p, const Point& q, long n, const RealContext& ctx,
                                  ConstructionTrace* trace, const std::string& label_prefix) {
    if (n < 2) throw std::domain_error("divide_segment: n must be at least 2");
    mpfr_prec_t prec = ctx.precision_bits();
    RealContext wide(prec + 32);
    Point pw = lifted(p, prec + 32), qw = lifted(q, prec + 32);
    Real dx = qw.x - pw.x, dy = qw.y - pw.y;
    Real len = (dx.sqr() + dy.sqr()).sqrt();
    if (len <= rel_tolerance(ctx)) throw std::domain_error("divide_segment: degenerate segment");

    ConstructionTrace local;
    ConstructionTrace& tr = trace ? *trace : local;
    auto lbl = [&](const std::string& stem) { return label_prefix + stem; };

    if (pw.label.empty()) pw.label = lbl("seg_p");
    if (qw.label.empty()) qw.label = lbl("seg_q");
    if (!tr.has_label(pw.label)) tr.given(pw);
    if (!tr.has_label(qw.label)) tr.given(qw);

    // Auxiliary ray through p at a 3-4-5 angle to pq: exact rational rotation,
    // never collinear with the segment.
    Real ux = (dx * 4ul - dy * 3ul) / 5ul;
    Real uy = (dx * 3ul + dy * 4ul) / 5ul;
    Point ray_tip = at(pw.x + ux, pw.y + uy, lbl("ray_tip"));
    tr.step("ray", {pw.label, qw.label}, {ray_tip}, {lbl("ray")});
    Line ray{pw, ray_tip};
    tr.attach_segment(lbl("ray"), pw, ray_tip);
    Line base{pw, qw};
    tr.step("line", {pw.label, qw.label}, {}, {lbl("base")});
    tr.attach_segment(lbl("base"), pw, qw);

    // n equal compass marks along the ray.
    std::vector<Point> marks;
    const Point* prev = &pw;
    for (long i = 1; i <= n; ++i) {
        std::string clabel = lbl("mark_arc") + std::to_string(i);
        tr.step("compass", {prev->label, pw.label, ray_tip.label}, {}, {clabel});
        Circle step_circle{*prev, len};
        tr.attach_circle(clabel, step_circle);
        auto cands = intersect_line_circle(ray, step_circle, wide);
        Real ex = pw.x + ux * static_cast<unsigned long>(i);
        Real ey = pw.y + uy * static_cast<unsigned long>(i);
        Point g = nearest_to(cands, ex, ey);
        g.label = lbl("G") + std::to_string(i);
        tr.step("intersect_line_circle", {lbl("ray"), clabel}, {g});
        marks.push_back(g);
        prev = &marks.back();
    }

    const Point& gn = marks.back();
    tr.step("line", {gn.label, qw.label}, {}, {lbl("crossline")});
    tr.attach_segment(lbl("crossline"), gn, qw);

    std::vector<Point> out;
    for (long i = 1; i < n; ++i) {
        const Point& gi = marks[static_cast<size_t>(i - 1)];
        // Parallel to (gn -> q) through gi via the parallelogram gi, w, q, gn.
        std::string c1l = lbl("par_a") + std::to_string(i);
        std::string c2l = lbl("par_b") + std::to_string(i);
        tr.step("compass", {gi.label, gn.label, qw.label}, {}, {c1l});
        tr.step("compass", {qw.label, gi.label, gn.label}, {}, {c2l});
        Circle c1{gi, distance(gn, qw)};
        Circle c2{qw, distance(gi, gn)};
        Real ex = gi.x + (qw.x - gn.x);
        Real ey = gi.y + (qw.y - gn.y);
        auto cands = intersect_circles(c1, c2, wide);
        Point w = nearest_to(cands, ex, ey);
        w.label = lbl("W") + std::to_string(i);
        tr.step("intersect_circles", {c1l, c2l}, {w});
        std::string par = lbl("par") + std::to_string(i);
        tr.step("line", {gi.label, w.label}, {}, {par});
        tr.attach_segment(par, gi, w);
        LineIntersection cut = intersect_lines(Line{gi, w}, base, wide);
        cut.point.label = lbl("P") + std::to_string(i);
        tr.step("intersect_lines", {par, lbl("base")}, {cut.point});
        if (cut.ill_conditioned) tr.warn_last("near-parallel intersection");
        out.push_back(lifted(cut.point, prec));
    }
    return out;
}

Point geometric_mean_point(const Point& a, const Point& b, const Point& foot,
                           const RealContext& ctx, ConstructionTrace* trace) {
    mpfr_prec_t prec = ctx.precision_bits();
    RealContext wide(prec + 32);
    Point aw = lifted(a, prec + 32), bw = lifted(b, prec + 32), fw = lifted(foot, prec + 32);
    Real dx = bw.x - aw.x, dy = bw.y - aw.y;
    Real len2 = dx.sqr() + dy.sqr();
    Real len = len2.sqrt();
    if (len <= rel_tolerance(ctx)) throw std::domain_error("geometric_mean_point: a equals b");
    Real cross = (fw.x - aw.x) * dy - (fw.y - aw.y) * dx;
    if (cross.abs() > rel_tolerance(ctx) * len2) {
        throw std::domain_error("geometric_mean_point: foot is not on the segment");
    }
    Real t = ((fw.x - aw.x) * dx + (fw.y - aw.y) * dy) / len2;
    Real tol = rel_tolerance(ctx);
    if (t < -tol || t > 1ul + tol) {
        throw std::domain_error("geometric_mean_point: foot is outside the segment");
    }

    ConstructionTrace local;
    ConstructionTrace& tr = trace ? *trace : local;
    if (aw.label.empty()) aw.label = "gm_a";
    if (bw.label.empty()) bw.label = "gm_b";
    if (fw.label.empty()) fw.label = "gm_foot";
    if (!tr.has_label(aw.label)) tr.given(aw);
    if (!tr.has_label(bw.label)) tr.given(bw);
    if (!tr.has_label(fw.label)) tr.given(fw);

    // Degenerate feet: the semicircle meets the perpendicular at an endpoint.
    if (t.abs() <= tol) return lifted(aw, prec, "M");
    if ((t - 1ul).abs() <= tol) return lifted(bw, prec, "M");

    // Midpoint of ab by bisector arcs, then the semicircle on diameter ab.
    Circle arc1{aw, len}, arc2{bw, len};
    tr.step("circle", {aw.label, bw.label}, {}, {"gm_arc1"});
    tr.step("circle", {bw.label, aw.label}, {}, {"gm_arc2"});
    auto bis_pts = intersect_circles(arc1, arc2, wide);
    if (bis_pts.size() != 2) throw std::logic_error("geometric_mean_point: bisector arcs failed");
    bis_pts[0].label = "gm_u";
    bis_pts[1].label = "gm_v";
    tr.step("intersect_circles", {"gm_arc1", "gm_arc2"}, {bis_pts[0], bis_pts[1]});
    tr.step("line", {"gm_u", "gm_v"}, {}, {"gm_bis"});
    Line bis{bis_pts[0], bis_pts[1]};
    Line base{aw, bw};
    tr.step("line", {aw.label, bw.label}, {}, {"gm_base"});
    LineIntersection midr = intersect_lines(bis, base, wide);
    Point mid = midr.point;
    mid.label = "gm_mid";
    tr.step("intersect_lines", {"gm_bis", "gm_base"}, {mid});
    Circle semi{mid, distance(mid, aw)};
    tr.step("circle", {"gm_mid", aw.label}, {}, {"gm_semi"});

    // Perpendicular at the foot: symmetric helper points on the base line,
    // then their bisector.
    Circle around_foot{fw, len};
    tr.step("compass", {fw.label, aw.label, bw.label}, {}, {"gm_fc"});
    auto helpers = intersect_line_circle(base, around_foot, wide);
    if (helpers.size() != 2) throw std::logic_error("geometric_mean_point: foot helpers failed");
    helpers[0].label = "gm_h1";
    helpers[1].label = "gm_h2";
    tr.step("intersect_line_circle", {"gm_base", "gm_fc"}, {helpers[0], helpers[1]});
    Circle harc1{helpers[0], distance(helpers[0], helpers[1])};
    Circle harc2{helpers[1], distance(helpers[0], helpers[1])};
    tr.step("circle", {"gm_h1", "gm_h2"}, {}, {"gm_harc1"});
    tr.step("circle", {"gm_h2", "gm_h1"}, {}, {"gm_harc2"});
    auto perp_pts = intersect_circles(harc1, harc2, wide);
    if (perp_pts.size() != 2) throw std::logic_error("geometric_mean_point: perpendicular failed");
    perp_pts[0].label = "gm_p1";
    perp_pts[1].label = "gm_p2";
    tr.step("intersect_circles", {"gm_harc1", "gm_harc2"}, {perp_pts[0], perp_pts[1]});
    tr.step("line", {"gm_p1", "gm_p2"}, {}, {"gm_perp"});
    Line perp{perp_pts[0], perp_pts[1]};

    auto cands = intersect_line_circle(perp, semi, wide);
    // Positive side of a->b (counterclockwise normal).
    Real ex = fw.x - dy / len;
    Real ey = fw.y + dx / len;
    Point m = nearest_to(cands, ex, ey);
    m.label = "M";
    tr.step("intersect_line_circle", {"gm_perp", "gm_semi"}, {m});
    return lifted(m, prec, "M");
}

namespace {

// Steps 1-2 shared by both figures: unit circle (scaled), diameter axis,
// vertical axis, and the golden rectangle OEID.
struct FigureBase {
    Point O, R, A, D, E, I;
    Line axis, vertical;
    Circle c0;
};

FigureBase golden_rectangle(Builder& b, const Real& s) {
    FigureBase f;
    mpfr_prec_t w = b.wide.precision_bits();
    Real zero = Real::from_ui(0, w);
    f.O = b.given(zero, zero, "O");
    f.R = b.given(s.to_precision(w), zero, "R");
    f.c0 = b.circle(f.O, f.R, "C0");
    f.axis = b.line(f.O, f.R, "axis");
    f.A = b.pick_line_circle(f.axis, "axis", f.c0, "C0", -f.R.x, zero, "A");
    // Vertical axis through O: bisector of the diameter ends.
    std::string vl = "vertical";
    Line v = b.bisector(f.A, f.R, vl);
    f.vertical = v;
    f.D = b.pick_line_circle(f.vertical, vl, f.c0, "C0", zero, f.R.x, "D");
    // Unit square corner above R, then the midpoint-arc sweep to E = (phi s, 0).
    Circle cu1 = b.compass(f.R, f.O, f.D, "sq_a");
    Circle cu2 = b.compass(f.D, f.O, f.R, "sq_b");
    Point U = b.pick_circles(cu1, "sq_a", cu2, "sq_b", f.R.x, f.R.x, "U");
    Point M0 = b.midpoint(f.O, f.R, f.axis, "axis", "M0");
    Circle sweep = b.compass(M0, M0, U, "sweep");
    Real phi_s = f.R.x * (Real::from_ui(5, w).sqrt() + 1ul).mul_2si(-1);
    f.E = b.pick_line_circle(f.axis, "axis", sweep, "sweep", phi_s, zero, "E");
    Circle ci1 = b.compass(f.E, f.O, f.D, "rect_a");
    Circle ci2 = b.compass(f.D, f.O, f.E, "rect_b");
    f.I = b.pick_circles(ci1, "rect_a", ci2, "rect_b", f.E.x, f.R.x, "I");
    return f;
}

void relabel(Builder& b, const Point& p, const std::string& label) {
    Point copy = p;
    copy.label = label;
    b.trace.step("mark", {p.label}, {copy});
}

}  // namespace

ConstructionTrace run_dixon(const RealContext& ctx) { return run_dixon(ctx, ctx.make_ui(1)); }

ConstructionTrace run_dixon(const RealContext& ctx, const Real& scale) {
    if (ctx.precision_bits() < 128) {
        throw std::invalid_argument("run_dixon: need at least 128 bits");
    }
    Builder b(ctx);
    mpfr_prec_t w = b.wide.precision_bits();
    Real s = scale.to_precision(w);
    FigureBase f = golden_rectangle(b, s);

    // Fifth part of AE, added past E to reach |AL| = (6/5)(1 + phi) s.
    auto cuts = divide_segment(f.A, f.E, 5, b.wide, &b.trace, "d5_");
    relabel(b, b.trace.point("d5_P4"), "H");
    Point H = cuts[3];
    Circle ext = b.compass(f.E, b.trace.point("H"), f.E, "fifth");
    Real ex = f.E.x + (f.E.x - H.x.to_precision(w));
    Point L = b.pick_line_circle(f.axis, "axis", ext, "fifth", ex, Real::from_ui(0, w), "L");

    // Semicircle mean: |AM|^2 = |AO| * |AL|.
    Point M = geometric_mean_point(f.A, L, f.O, b.wide, &b.trace);

    // Square AMNP on AM (perpendiculars raised at M and at A).
    Line am = b.line(f.A, M, "seg_AM");
    Circle cm = b.circle(M, f.A, "CM");
    Real mirx = M.x.mul_2si(1) - f.A.x, miry = M.y.mul_2si(1) - f.A.y;
    Point A2 = b.pick_line_circle(am, "seg_AM", cm, "CM", mirx, miry, "A2");
    Line perp_m = b.bisector(f.A, A2, "perpM");
    // Counterclockwise side: N = M + rot90(M - A).
    Real vx = M.x - f.A.x, vy = M.y - f.A.y;
    Point N = b.pick_line_circle(perp_m, "perpM", cm, "CM", M.x - vy, M.y + vx, "N");
    Circle ca = b.circle(f.A, M, "CA");
    Point M2 = b.pick_line_circle(am, "seg_AM", ca, "CA", f.A.x - vx, f.A.y - vy, "M2");
    Line perp_a = b.bisector(M, M2, "perpA");
    Point P = b.pick_line_circle(perp_a, "perpA", ca, "CA", f.A.x - vy, f.A.y + vx, "P");
    b.line(M, N, "seg_MN");
    b.line(N, P, "seg_NP");
    b.line(P, f.A, "seg_PA");

    Real side = distance(f.A, M);
    Real area = side.sqr();
    Real err = (area - b.wide.pi() * s.sqr()).abs();
    mpfr_prec_t p = ctx.precision_bits();
    b.trace.set_final("side_AM", side.to_precision(p));
    b.trace.set_final("area", area.to_precision(p));
    b.trace.set_final("area_error_vs_pi", err.to_precision(p));
    return std::move(b.trace);
}

ConstructionTrace run_pi_rectangle(const RealContext& ctx) {
    return run_pi_rectangle(ctx, ctx.make_ui(1));
}

ConstructionTrace run_pi_rectangle(const RealContext& ctx, const Real& scale) {
    if (ctx.precision_bits() < 128) {
        throw std::invalid_argument("run_pi_rectangle: need at least 128 bits");
    }
    Builder b(ctx);
    mpfr_prec_t w = b.wide.precision_bits();
    Real s = scale.to_precision(w);
    FigureBase f = golden_rectangle(b, s);

    // Fifth part of OE, added past E: |OL| = (6/5) phi s.
    auto cuts = divide_segment(f.O, f.E, 5, b.wide, &b.trace, "f5_");
    relabel(b, b.trace.point("f5_P4"), "H");
    Point H = cuts[3];
    Circle ext = b.compass(f.E, b.trace.point("H"), f.E, "fifth");
    Real ex = f.E.x + (f.E.x - H.x.to_precision(w));
    Point L = b.pick_line_circle(f.axis, "axis", ext, "fifth", ex, Real::from_ui(0, w), "L");

    // Arc transfer: N on the vertical with |ON| = |OE| = phi s.
    Circle arc = b.circle(f.O, f.E, "arcOE");
    Point N = b.pick_line_circle(f.vertical, "vertical", arc, "arcOE", Real::from_ui(0, w), f.E.x,
                                 "N");
    // Fourth corner M = L + (N - O).
    Circle cm1 = b.compass(L, f.O, N, "rect_c");
    Circle cm2 = b.compass(N, f.O, L, "rect_d");
    Point M = b.pick_circles(cm1, "rect_c", cm2, "rect_d", L.x, N.y, "M");
    b.line(f.O, L, "seg_OL");
    b.line(L, M, "seg_LM");
    b.line(M, N, "seg_MN");
    b.line(N, f.O, "seg_NO");

    Real side_ol = distance(f.O, L);
    Real side_on = distance(f.O, N);
    Real area = side_ol * side_on;
    Real err = (area - b.wide.pi() * s.sqr()).abs();
    mpfr_prec_t p = ctx.precision_bits();
    b.trace.set_final("side_OL", side_ol.to_precision(p));
    b.trace.set_final("side_ON", side_on.to_precision(p));
    b.trace.set_final("area", area.to_precision(p));
    b.trace.set_final("area_error_vs_pi", err.to_precision(p));
    return std::move(b.trace);
}

std::vector<catalog::IdentityResult> verify_figure2_relations(const RealContext& ctx) {
    if (ctx.precision_bits() < 192) {
        throw std::invalid_argument("verify_figure2_relations: need at least 192 bits");
    }
    Builder b(ctx);
    mpfr_prec_t w = b.wide.precision_bits();
    Real zero = Real::from_ui(0, w);
    Real one = Real::from_ui(1, w);

    Point O = b.given(zero, zero, "O");
    Point F = b.given(one, zero, "F");
    Circle c0 = b.circle(O, F, "C0");
    Line axis = b.line(O, F, "axis");
    Point A = b.pick_line_circle(axis, "axis", c0, "C0", -one, zero, "A");
    Line vert = b.bisector(A, F, "vertical");
    Point T = b.pick_line_circle(vert, "vertical", c0, "C0", zero, one, "T");
    Point Mid = b.midpoint(O, F, axis, "axis", "Mid");
    Circle gold = b.compass(Mid, Mid, T, "goldarc");
    Real phi_w = (Real::from_ui(5, w).sqrt() + 1ul).mul_2si(-1);
    Point Xp = b.pick_line_circle(axis, "axis", gold, "goldarc", phi_w, zero, "Xp");
    Point Xm = b.pick_line_circle(axis, "axis", gold, "goldarc", 1ul - phi_w, zero, "Xm");

    // Chord fan from F: |BF| = phi (gnomon), |DF| = phi - 1 (decagon side).
    Circle cb = b.compass(F, O, Xp, "span_phi");
    auto bcands = intersect_circles(cb, c0, b.wide);
    Point B = upper_of(bcands);
    B.label = "B";
    b.trace.step("intersect_circles", {"span_phi", "C0"}, {B});
    Circle cd = b.compass(F, O, Xm, "span_dec");
    auto dcands = intersect_circles(cd, c0, b.wide);
    Point D = upper_of(dcands);
    D.label = "D";
    b.trace.step("intersect_circles", {"span_dec", "C0"}, {D});

    RealContext exact_ctx(w);
    Real pent_side = GoldenElement(3, -1).to_real(exact_ctx).sqrt();
    Real pent_diag = GoldenElement(2, 1).to_real(exact_ctx).sqrt();
    Real dec_side = GoldenElement(2, -1).to_real(exact_ctx).sqrt();
    Real tol = Real::from_ui(1, ctx.precision_bits())
                   .mul_2si(-(static_cast<long>(ctx.precision_bits()) - 16));

    std::vector<catalog::IdentityResult> out;
    auto check = [&](std::string id, std::string statement, const Real& lhs, const Real& rhs) {
        Real residual = (lhs - rhs).abs();
        bool pass = residual <= tol;
        out.push_back({"figure2", std::move(id), std::move(statement), pass,
                       "residual " + residual.to_sci(3)});
    };
    auto right_angle = [&](std::string id, std::string statement, const Point& u, const Point& v,
                           const Point& corner) {
        Real d = (u.x - corner.x) * (v.x - corner.x) + (u.y - corner.y) * (v.y - corner.y);
        Real norm = distance(u, corner) * distance(v, corner);
        Real residual = (d / norm).abs();
        bool pass = residual <= tol;
        out.push_back({"figure2", std::move(id), std::move(statement), pass,
                       "normalized dot " + residual.to_sci(3)});
    };

    check("pentagon-side", "|AB| = sqrt(3 - phi)", distance(A, B), pent_side);
    check("gnomon-side", "|BF| = phi", distance(B, F), phi_w);
    check("pentagon-diagonal", "|AD| = sqrt(2 + phi)", distance(A, D), pent_diag);
    check("decagon-side", "|DF| = sqrt(2 - phi)", distance(D, F), dec_side);
    check("diameter", "|AF| = 2", distance(A, F), Real::from_ui(2, w));
    right_angle("thales-b", "angle ABF = pi/2", A, F, B);
    right_angle("thales-d", "angle ADF = pi/2", A, F, D);
    check("diagonal-ratio", "|AD| = phi |AB|", distance(A, D), phi_w * distance(A, B));
    check("cathetus-closure-abf", "|AB|^2 + |BF|^2 = 4",
          distance(A, B).sqr() + distance(B, F).sqr(), Real::from_ui(4, w));
    check("cathetus-closure-adf", "|AD|^2 + |DF|^2 = 4",
          distance(A, D).sqr() + distance(D, F).sqr(), Real::from_ui(4, w));
    return out;
}

void write_svg(const ConstructionTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out.good()) throw IoError("cannot open '" + path + "' for writing");

    struct Dot {
        double x, y;
        std::string label;
    };
    std::vector<Dot> dots;
    double min_x = -1.5, max_x = 1.5, min_y = -1.5, max_y = 1.5;
    auto grow = [&](double x, double y) {
        min_x = std::min(min_x, x - 0.3);
        max_x = std::max(max_x, x + 0.3);
        min_y = std::min(min_y, y - 0.3);
        max_y = std::max(max_y, y + 0.3);
    };
    for (const auto& s : trace.steps()) {
        for (const auto& lbl : s.outputs) {
            if (!s.coords.empty()) {
                try {
                    const Point& p = trace.point(lbl);
                    double x = p.x.to_double(), y = p.y.to_double();
                    grow(x, y);
                    dots.push_back({x, y, lbl});
                } catch (const std::out_of_range&) {
                }
            }
        }
    }
    for (const auto& seg : trace.diagram_segments()) {
        grow(seg.x1, seg.y1);
        grow(seg.x2, seg.y2);
    }

    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };

    double width = max_x - min_x, height = max_y - min_y;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(min_x) << " "
        << num(-max_y) << " " << num(width) << " " << num(height) << "\">\n";
    for (const auto& [name, value] : trace.finals()) {
        out << "<!-- " << name << " = " << value.to_fixed(12) << " -->\n";
    }
    out << "<g transform=\"scale(1,-1)\" stroke=\"#888\" stroke-width=\"0.006\" fill=\"none\">\n";
    for (const auto& c : trace.diagram_circles()) {
        out << "<circle cx=\"" << num(c.cx) << "\" cy=\"" << num(c.cy) << "\" r=\"" << num(c.r)
            << "\"/>\n";
    }
    out << "</g>\n";
    out << "<g transform=\"scale(1,-1)\" stroke=\"black\" stroke-width=\"0.012\" fill=\"none\">\n";
    for (const auto& s : trace.diagram_segments()) {
        out << "<line x1=\"" << num(s.x1) << "\" y1=\"" << num(s.y1) << "\" x2=\"" << num(s.x2)
            << "\" y2=\"" << num(s.y2) << "\"/>\n";
    }
    for (const auto& d : dots) {
        out << "<circle cx=\"" << num(d.x) << "\" cy=\"" << num(d.y)
            << "\" r=\"0.018\" fill=\"black\"/>\n";
    }
    out << "</g>\n";
    for (const auto& d : dots) {
        out << "<text x=\"" << num(d.x + 0.03) << "\" y=\"" << num(-(d.y + 0.03))
            << "\" font-size=\"0.1\">" << d.label << "</text>\n";
    }
    out << "</svg>\n";
    out.close();
    if (!out.good()) throw IoError("failed writing '" + path + "'");
}

}  // namespace radixpi::geom
