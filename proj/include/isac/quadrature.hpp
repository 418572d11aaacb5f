#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace isac {

// Tolerances and limits shared by every numerical integration in the toolkit.
struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_depth = 50;  // maximum adaptive bisection depth

    void validate(const std::string& prefix = "quadrature") const {
        if (!(rel_tol > 0.0)) throw std::invalid_argument(prefix + ".rel_tol must be > 0");
        if (!(abs_tol > 0.0)) throw std::invalid_argument(prefix + ".abs_tol must be > 0");
        if (max_depth < 10) throw std::invalid_argument(prefix + ".max_depth must be >= 10");
    }
};

struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
    bool converged = true;  // false when the depth/interval budget ran out first
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// positive half of [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
void gk15(F& f, double a, double b, double& kronrod, double& err) {
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);

    const double fc = f(center);
    double gauss = fc * kGaussWeights[3];
    kronrod = fc * kKronrodWeights[7];

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += fsum * kKronrodWeights[i];
        if (i % 2 == 1) gauss += fsum * kGaussWeights[i / 2];
    }
    kronrod *= half;
    gauss *= half;
    err = std::abs(kronrod - gauss);
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b]. Segments are bisected
// until each meets its length-proportional share of the global tolerance or
// max_depth is reached; in the latter case the best estimate is still
// returned with converged = false.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureSpec& q) {
    if (!(b >= a)) throw std::invalid_argument("integrate: bounds must satisfy a <= b");
    QuadResult out;
    if (a == b) return out;

    struct Segment {
        double a, b, value, err;
        int depth;
    };

    double whole, whole_err;
    detail::gk15(f, a, b, whole, whole_err);
    const double scale = std::max(std::abs(whole), q.abs_tol);
    const double global_tol = std::max(q.abs_tol, q.rel_tol * scale);
    const double total_len = b - a;

    std::vector<Segment> stack;
    stack.push_back({a, b, whole, whole_err, 0});

    // Hard cap on refinement work independent of max_depth.
    constexpr std::size_t kMaxSegments = 1u << 18;
    std::size_t processed = 0;

    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        ++processed;

        const double local_tol = global_tol * (seg.b - seg.a) / total_len;
        const bool budget_left = seg.depth < q.max_depth && processed < kMaxSegments;
        if (seg.err <= local_tol || !budget_left) {
            if (seg.err > local_tol) out.converged = false;
            out.value += seg.value;
            out.est_error += seg.err;
            continue;
        }

        const double mid = 0.5 * (seg.a + seg.b);
        Segment left{seg.a, mid, 0.0, 0.0, seg.depth + 1};
        Segment right{mid, seg.b, 0.0, 0.0, seg.depth + 1};
        detail::gk15(f, left.a, left.b, left.value, left.err);
        detail::gk15(f, right.a, right.b, right.value, right.err);
        stack.push_back(left);
        stack.push_back(right);
    }

    if (!std::isfinite(out.value)) out.converged = false;
    return out;
}

} // namespace isac
