#include "geometry/curve.hpp"

#include <charconv>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common/error.hpp"

namespace green3 {

namespace {

constexpr double kKiteA = 0.65;
constexpr double kKiteB = 1.5;

double parse_positive(const std::string& s, const std::string& whole) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || !(v > 0.0) || !std::isfinite(v)) {
        fail(ErrorCode::Configuration, "curve: bad ellipse semi-axis in '" + whole + "'");
    }
    return v;
}

}  // namespace

CurveSpec CurveSpec::parse(const std::string& text) {
    if (text == "disk") return {};
    if (text == "kite") return {CurveShape::Kite, 1.0, 1.0};
    const std::string prefix = "ellipse:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string rest = text.substr(prefix.size());
        const auto comma = rest.find(',');
        if (comma == std::string::npos) {
            fail(ErrorCode::Configuration, "curve: expected ellipse:a,b, got '" + text + "'");
        }
        return {CurveShape::Ellipse, parse_positive(rest.substr(0, comma), text),
                parse_positive(rest.substr(comma + 1), text)};
    }
    fail(ErrorCode::Configuration, "curve: unknown shape '" + text + "' (disk, ellipse:a,b, kite)");
}

std::string CurveSpec::to_string() const {
    switch (shape) {
        case CurveShape::Disk: return "disk";
        case CurveShape::Kite: return "kite";
        case CurveShape::Ellipse: {
            // Shortest representation that parses back to the same doubles.
            char buf[64];
            auto r = std::to_chars(buf, buf + sizeof buf, a);
            *r.ptr++ = ',';
            r = std::to_chars(r.ptr, buf + sizeof buf, b);
            return "ellipse:" + std::string(buf, r.ptr);
        }
    }
    return "disk";
}

InterfaceCurve::InterfaceCurve(CurveSpec spec) : spec_(spec) {
    if (spec_.shape == CurveShape::Disk) spec_.a = spec_.b = 1.0;
}

Vec2 InterfaceCurve::point(double t) const {
    switch (spec_.shape) {
        case CurveShape::Disk: return {std::cos(t), std::sin(t)};
        case CurveShape::Ellipse: return {spec_.a * std::cos(t), spec_.b * std::sin(t)};
        case CurveShape::Kite:
            return {std::cos(t) + kKiteA * std::cos(2 * t) - kKiteA, kKiteB * std::sin(t)};
    }
    return {};
}

Vec2 InterfaceCurve::d1(double t) const {
    switch (spec_.shape) {
        case CurveShape::Disk: return {-std::sin(t), std::cos(t)};
        case CurveShape::Ellipse: return {-spec_.a * std::sin(t), spec_.b * std::cos(t)};
        case CurveShape::Kite:
            return {-std::sin(t) - 2 * kKiteA * std::sin(2 * t), kKiteB * std::cos(t)};
    }
    return {};
}

Vec2 InterfaceCurve::d2(double t) const {
    switch (spec_.shape) {
        case CurveShape::Disk: return {-std::cos(t), -std::sin(t)};
        case CurveShape::Ellipse: return {-spec_.a * std::cos(t), -spec_.b * std::sin(t)};
        case CurveShape::Kite:
            return {-std::cos(t) - 4 * kKiteA * std::cos(2 * t), -kKiteB * std::sin(t)};
    }
    return {};
}

Vec2 InterfaceCurve::normal(double t) const {
    const Vec2 d = d1(t);
    const double s = norm(d);
    return {d.y / s, -d.x / s};
}

double InterfaceCurve::curvature(double t) const {
    const Vec2 a = d1(t), b = d2(t);
    const double s = norm(a);
    return (a.x * b.y - a.y * b.x) / (s * s * s);
}

bool InterfaceCurve::contains(Vec2 p) const {
    // Winding number by accumulated angle over a fine polygon; the curves are
    // smooth so 1024 vertices resolve every probe that is not on the curve.
    constexpr int samples = 1024;
    double total = 0.0;
    Vec2 prev = point(0.0) - p;
    for (int j = 1; j <= samples; ++j) {
        const Vec2 cur = point(2 * pi * j / samples) - p;
        total += std::atan2(prev.x * cur.y - prev.y * cur.x, dot(prev, cur));
        prev = cur;
    }
    return std::abs(total) > pi;
}

InterfaceCurve::Foot InterfaceCurve::closest_point(Vec2 p) const {
    constexpr int samples = 720;
    double best_t = 0.0;
    double best = INFINITY;
    for (int j = 0; j < samples; ++j) {
        const double t = 2 * pi * j / samples;
        const Vec2 d = point(t) - p;
        const double r2 = dot(d, d);
        if (r2 < best) {
            best = r2;
            best_t = t;
        }
    }
    // Newton on g(t) = (x(t) - p) . x'(t), kept inside the bracketing cell.
    double t = best_t;
    const double h = 2 * pi / samples;
    for (int it = 0; it < 30; ++it) {
        const Vec2 d = point(t) - p;
        const Vec2 v = d1(t);
        const double g = dot(d, v);
        const double dg = dot(v, v) + dot(d, d2(t));
        if (dg <= 0.0) break;
        const double step = g / dg;
        const double next = std::clamp(t - step, best_t - h, best_t + h);
        if (std::abs(next - t) < 1e-15) {
            t = next;
            break;
        }
        t = next;
    }
    t = std::fmod(t, 2 * pi);
    if (t < 0) t += 2 * pi;
    return {t, norm(point(t) - p)};
}

double InterfaceCurve::signed_area(int samples) const {
    double area = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double t = 2 * pi * j / samples;
        const Vec2 x = point(t), v = d1(t);
        area += x.x * v.y - x.y * v.x;
    }
    return 0.5 * area * 2 * pi / samples;
}

RVector QuadratureGrid::arc_weights() const {
    RVector w(n);
    for (int j = 0; j < n; ++j) w[j] = weight * speed[j];
    return w;
}

double QuadratureGrid::length() const { return arc_weights().sum(); }

QuadratureGrid make_grid(const InterfaceCurve& curve, int n) {
    if (n < 8 || n % 2 != 0) {
        fail(ErrorCode::Configuration,
             "node count must be even and at least 8, got " + std::to_string(n));
    }
    QuadratureGrid g;
    g.n = n;
    g.weight = 2 * pi / n;
    g.t.resize(n);
    g.x.resize(n);
    g.dx.resize(n);
    g.normal.resize(n);
    g.speed.resize(n);
    g.curvature.resize(n);
    for (int j = 0; j < n; ++j) {
        const double t = 2 * pi * j / n;
        g.t[j] = t;
        g.x[j] = curve.point(t);
        g.dx[j] = curve.d1(t);
        g.speed[j] = norm(g.dx[j]);
        g.normal[j] = curve.normal(t);
        g.curvature[j] = curve.curvature(t);
    }
    return g;
}

Discretization make_curve(const CurveSpec& spec, int n) {
    InterfaceCurve curve(spec);
    QuadratureGrid grid = make_grid(curve, n);
    return {std::move(curve), std::move(grid)};
}

}  // namespace green3
