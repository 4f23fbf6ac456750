#pragma once

#include <string>
#include <vector>

#include "common/types.hpp"

namespace green3 {

enum class CurveShape { Disk, Ellipse, Kite };

/// Shape selector as given on the command line: "disk", "ellipse:a,b", "kite".
struct CurveSpec {
    CurveShape shape = CurveShape::Disk;
    double a = 1.0;
    double b = 1.0;

    static CurveSpec parse(const std::string& text);
    std::string to_string() const;
};

/// Smooth closed counterclockwise curve x(t), t in [0, 2 pi). The unit normal
/// n+ points out of the bounded component.
class InterfaceCurve {
public:
    explicit InterfaceCurve(CurveSpec spec);

    const CurveSpec& spec() const { return spec_; }

    Vec2 point(double t) const;
    Vec2 d1(double t) const;
    Vec2 d2(double t) const;
    double speed(double t) const { return norm(d1(t)); }
    Vec2 normal(double t) const;
    double curvature(double t) const;

    /// Winding-number test for the bounded component (interior side).
    bool contains(Vec2 p) const;

    /// Parameter of the nearest curve point and the distance to it.
    struct Foot {
        double t = 0.0;
        double distance = 0.0;
    };
    Foot closest_point(Vec2 p) const;

    /// Signed area by the shoelace integral; positive for counterclockwise curves.
    double signed_area(int samples = 512) const;

private:
    CurveSpec spec_;
};

/// Trapezoidal nodes t_j = 2 pi j / N with the curve data cached at the nodes.
struct QuadratureGrid {
    int n = 0;
    double weight = 0.0;
    std::vector<double> t;
    std::vector<Vec2> x;
    std::vector<Vec2> dx;
    std::vector<Vec2> normal;
    std::vector<double> speed;
    std::vector<double> curvature;

    /// Arc-length weights w_j = (2 pi / N) |x'(t_j)|.
    RVector arc_weights() const;
    double length() const;
};

struct Discretization {
    InterfaceCurve curve;
    QuadratureGrid grid;
};

/// Builds the curve and its grid. N must be even and at least 8.
Discretization make_curve(const CurveSpec& spec, int n);

QuadratureGrid make_grid(const InterfaceCurve& curve, int n);

}  // namespace green3
