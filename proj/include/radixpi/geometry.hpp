#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radixpi/catalog.hpp"
#include "radixpi/real.hpp"

namespace radixpi::geom {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    Real x;
    Real y;
    std::string label;
};

/// A straightedge line through two distinct points.
struct Line {
    Point a;
    Point b;
};

struct Circle {
    Point center;
    Real radius;
};

/// Append-only record of a construction: numbered steps, a label registry,
/// and the final measured quantities. Steps may only consume labels that
/// earlier steps (or axiomatic givens) produced; violations throw.
class ConstructionTrace {
public:
    struct Step {
        int index = 0;
        std::string op;
        std::vector<std::string> inputs;
        std::vector<std::string> outputs;
        std::string coords;   // coordinates of output points, 20 digits
        std::string warning;  // conditioning note, empty if none
    };

    /// Registers an axiomatic starting point.
    void given(const Point& p);
    /// Appends a step; points in `out_points` join the label registry,
    /// `out_other` registers labels of new lines/circles.
    void step(const std::string& op, const std::vector<std::string>& inputs,
              const std::vector<Point>& out_points,
              const std::vector<std::string>& out_other = {});
    /// Attaches a warning to the most recent step.
    void warn_last(const std::string& text);

    void set_final(const std::string& name, const Real& value);

    /// Display-grade geometry for the diagram renderer.
    struct DiagramCircle {
        std::string label;
        double cx, cy, r;
    };
    struct DiagramSegment {
        std::string label;
        double x1, y1, x2, y2;
    };
    void attach_circle(const std::string& label, const Circle& c);
    void attach_segment(const std::string& label, const Point& a, const Point& b);
    const std::vector<DiagramCircle>& diagram_circles() const { return circles_; }
    const std::vector<DiagramSegment>& diagram_segments() const { return segments_; }

    bool has_label(const std::string& label) const;
    const Point& point(const std::string& label) const;
    const std::vector<Step>& steps() const { return steps_; }
    const std::vector<std::pair<std::string, Real>>& finals() const { return finals_; }

    /// Line-oriented serialization:
    ///   step <n>: <op> <inputs> -> <outputs> [<coords>]
    std::string to_text() const;

private:
    void require_known(const std::string& label) const;
    void register_label(const std::string& label);

    std::vector<Step> steps_;
    std::vector<std::string> known_;
    std::vector<Point> points_;
    std::vector<std::pair<std::string, Real>> finals_;
    std::vector<DiagramCircle> circles_;
    std::vector<DiagramSegment> segments_;
};

struct LineIntersection {
    Point point;
    /// Set when the lines meet at an angle small enough to amplify input
    /// rounding past 2^(precision/8); the trace carries the warning.
    bool ill_conditioned = false;
};

Real distance(const Point& p, const Point& q);

/// Unique intersection of two non-parallel lines. Parallel (determinant
/// below 2^-(precision-16) relative to the direction magnitudes) throws.
LineIntersection intersect_lines(const Line& l1, const Line& l2, const RealContext& ctx);

/// 0, 1 or 2 intersection points, sorted by parameter along the line.
/// A discriminant within 4 ulp of zero counts as tangency (one point).
std::vector<Point> intersect_line_circle(const Line& l, const Circle& c, const RealContext& ctx);

/// 0, 1 or 2 intersection points of distinct circles via the radical line,
/// sorted lexicographically by (x, y). Coincident circles throw.
std::vector<Point> intersect_circles(const Circle& c1, const Circle& c2, const RealContext& ctx);

/// The n-1 internal points dividing pq into n equal parts, by the
/// auxiliary-ray-and-parallels construction. Auxiliary steps land in the
/// trace when one is supplied; `label_prefix` keeps the auxiliary labels
/// distinct when a trace hosts several divisions.
std::vector<Point> divide_segment(const Point& p, const Point& q, long n, const RealContext& ctx,
                                  ConstructionTrace* trace = nullptr,
                                  const std::string& label_prefix = "");

/// The point M on the perpendicular at `foot` meeting the semicircle on
/// diameter ab (Thales), so |aM|^2 = |a-foot| * |a-b|. `foot` must lie on
/// segment ab.
Point geometric_mean_point(const Point& a, const Point& b, const Point& foot,
                           const RealContext& ctx, ConstructionTrace* trace = nullptr);

/// Square-on-a-mean construction: unit circle, golden rectangle OEID,
/// fifth-part extension of AE to AL, semicircle mean AM, square AMNP.
/// Needs >= 128 bits. `scale` scales the starting radius.
ConstructionTrace run_dixon(const RealContext& ctx);
ConstructionTrace run_dixon(const RealContext& ctx, const Real& scale);

/// Rectangle construction: unit circle, golden rectangle, fifth-part
/// extension of OE to OL, arc transfer ON, rectangle OLMN. Needs >= 128 bits.
ConstructionTrace run_pi_rectangle(const RealContext& ctx);
ConstructionTrace run_pi_rectangle(const RealContext& ctx, const Real& scale);

/// Inscribes the pentagon/decagon chord fan in the unit circle and checks
/// the segment-length relations (pentagon side, gnomon, diagonal, decagon
/// side, Thales right angles, diagonal = phi * side). Needs >= 192 bits.
std::vector<catalog::IdentityResult> verify_figure2_relations(const RealContext& ctx);

/// Emits a static SVG diagram of the construction, coordinates rounded to
/// 12 significant digits. Throws IoError when the path is unwritable.
void write_svg(const ConstructionTrace& trace, const std::string& path);

}  // namespace radixpi::geom
