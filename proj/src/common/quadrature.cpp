#include "common/quadrature.hpp"

#include <algorithm>
#include <queue>

#include "common/error.hpp"

namespace green3 {

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) fail(ErrorCode::Configuration, "gauss_legendre: need at least one node");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration from the Tricomi initial guess.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute derivative at the converged root.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a = 0.0;
    double b = 0.0;
    double error = 0.0;
    int depth = 0;
    std::vector<cplx> value;

    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const VectorIntegrand& f, int dim, double a, double b, int depth,
             std::vector<cplx>& scratch) {
    Segment s;
    s.a = a;
    s.b = b;
    s.depth = depth;
    s.value.assign(dim, cplx{});
    std::vector<cplx> gauss(dim, cplx{});
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int j = 0; j < 8; ++j) {
        const int signs = (j == 7) ? 1 : 2;
        for (int sgn = 0; sgn < signs; ++sgn) {
            const double t = (sgn == 0) ? mid + half * kXgk[j] : mid - half * kXgk[j];
            f(t, scratch);
            for (int d = 0; d < dim; ++d) {
                s.value[d] += kWgk[j] * scratch[d];
                if (j % 2 == 1) gauss[d] += kWg[j / 2] * scratch[d];
            }
        }
    }
    double err = 0.0;
    for (int d = 0; d < dim; ++d) {
        s.value[d] *= half;
        gauss[d] *= half;
        err = std::max(err, std::abs(s.value[d] - gauss[d]));
    }
    s.error = err;
    return s;
}

}  // namespace

void integrate_adaptive(const VectorIntegrand& f, int dim, double a, double b,
                        std::span<cplx> result, const AdaptiveOptions& opts) {
    std::vector<cplx> scratch(dim);
    std::priority_queue<Segment> heap;
    Segment first = gk15(f, dim, a, b, 0, scratch);
    std::vector<cplx> total = first.value;
    double total_err = first.error;
    heap.push(std::move(first));
    int evaluations = 15;
    while (!heap.empty()) {
        double magnitude = 0.0;
        for (const auto& v : total) magnitude = std::max(magnitude, std::abs(v));
        if (total_err <= std::max(opts.abs_tol, opts.rel_tol * magnitude) ||
            evaluations >= opts.max_evaluations) {
            break;
        }
        Segment worst = heap.top();
        heap.pop();
        if (worst.depth >= opts.max_depth) {
            // Frozen: keep its contribution, stop refining it.
            total_err -= worst.error;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, dim, worst.a, mid, worst.depth + 1, scratch);
        Segment right = gk15(f, dim, mid, worst.b, worst.depth + 1, scratch);
        for (int d = 0; d < dim; ++d) total[d] += left.value[d] + right.value[d] - worst.value[d];
        total_err += left.error + right.error - worst.error;
        heap.push(std::move(left));
        heap.push(std::move(right));
        evaluations += 30;
    }
    for (int d = 0; d < dim; ++d) result[d] = total[d];
}

cplx extrapolate_to_zero(std::span<const double> h, std::span<const cplx> v) {
    const std::size_t n = h.size();
    if (n == 0 || v.size() != n) fail(ErrorCode::InvalidArgument, "extrapolate_to_zero: size mismatch");
    std::vector<cplx> p(v.begin(), v.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            // Neville recursion evaluated at h = 0.
            p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
        }
    }
    return p[0];
}

}  // namespace green3
