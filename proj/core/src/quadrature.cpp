#include "quantfam/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace quantfam {

namespace {

// Kronrod-15 abscissae and weights with the embedded Gauss-7 weights
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class Value, class Fn, class Axpy, class ErrNorm>
struct PanelRule {
    // one G7/K15 panel; fills the Kronrod value (scaled by the half-width)
    // and the |kronrod - gauss| error estimate
    static void apply(const Fn& f, double a, double b, Value& resk, double& err,
                      const Axpy& axpy, const ErrNorm& errnorm) {
        const double c = 0.5 * (a + b);
        const double h = 0.5 * (b - a);
        Value fc = f(c);
        Value kron{};
        Value gauss{};
        axpy(kron, kWgk[7], fc);
        axpy(gauss, kWg[3], fc);
        for (int i = 0; i < 7; ++i) {
            const double dx = h * kXgk[i];
            Value f1 = f(c - dx);
            Value f2 = f(c + dx);
            axpy(kron, kWgk[i], f1);
            axpy(kron, kWgk[i], f2);
            if (i % 2 == 1) {  // Gauss points are the odd Kronrod indices
                axpy(gauss, kWg[i / 2], f1);
                axpy(gauss, kWg[i / 2], f2);
            }
        }
        err = errnorm(kron, gauss) * std::fabs(h);
        resk = Value{};
        axpy(resk, h, kron);
    }
};

struct Segment {
    double a, b, err;
};

template <class Value, class Fn, class Axpy, class ErrNorm, class Add>
bool adaptive(const Fn& f, double a, double b, const QuadratureSettings& s, Value& out,
              double& errout, const Axpy& axpy, const ErrNorm& errnorm, const Add& add) {
    struct Seg {
        double a, b, err;
        Value val;
    };
    std::vector<Seg> heap;
    auto push = [&](double lo, double hi) {
        Seg seg;
        seg.a = lo;
        seg.b = hi;
        PanelRule<Value, Fn, Axpy, ErrNorm>::apply(f, lo, hi, seg.val, seg.err, axpy, errnorm);
        heap.push_back(seg);
    };
    push(a, b);
    while (true) {
        double total_err = 0.0;
        Value total{};
        for (const auto& seg : heap) {
            total_err += seg.err;
            add(total, seg.val);
        }
        double scale = errnorm(total, Value{});
        if (total_err <= std::max(s.abs_tol, s.rel_tol * scale)) {
            out = total;
            errout = total_err;
            return true;
        }
        if (static_cast<int>(heap.size()) >= s.max_segments) {
            out = total;
            errout = total_err;
            return false;
        }
        // split the worst segment
        std::size_t worst = 0;
        for (std::size_t i = 1; i < heap.size(); ++i)
            if (heap[i].err > heap[worst].err) worst = i;
        Seg w = heap[worst];
        heap.erase(heap.begin() + static_cast<std::ptrdiff_t>(worst));
        double mid = 0.5 * (w.a + w.b);
        if (mid == w.a || mid == w.b) {  // interval exhausted at double precision
            heap.push_back(w);
            out = Value{};
            errout = 0.0;
            for (const auto& seg : heap) {
                add(out, seg.val);
                errout += seg.err;
            }
            return true;
        }
        push(w.a, mid);
        push(mid, w.b);
    }
}

// scalar plumbing
inline void axpy1(double& acc, double w, double v) { acc += w * v; }
inline double errnorm1(double k, double g) { return std::fabs(k - g); }
inline void add1(double& acc, double v) { acc += v; }

// array<double,4> plumbing
using V4 = std::array<double, 4>;
inline void axpy4(V4& acc, double w, const V4& v) {
    for (int i = 0; i < 4; ++i) acc[i] += w * v[i];
}
inline double errnorm4(const V4& k, const V4& g) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::fabs(k[i] - g[i]));
    return m;
}
inline void add4(V4& acc, const V4& v) {
    for (int i = 0; i < 4; ++i) acc[i] += v[i];
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSettings& settings) {
    QuadratureResult r;
    r.converged = adaptive<double>(f, a, b, settings, r.value, r.error, axpy1, errnorm1, add1);
    return r;
}

std::array<double, 4> integrate4(const VectorIntegrand<4>& f, double a, double b,
                                 const QuadratureSettings& settings) {
    V4 out{};
    double err = 0.0;
    adaptive<V4>(f, a, b, settings, out, err, axpy4, errnorm4, add4);
    return out;
}

namespace {

template <class Value, class Fn, class Integrate, class Norm, class Add>
Value real_line_driver(const Fn& f, double w0, const QuadratureSettings& s,
                       const Integrate& integrate_fn, const Norm& norm, const Add& add) {
    Value acc = integrate_fn(f, -w0, w0, s);
    for (int side = 0; side < 2; ++side) {
        double lo = w0;
        double prev_mag = -1.0;
        int quiet = 0, growing = 0;
        for (int block = 0; block < 60; ++block) {
            double hi = lo * 2.0;
            Value piece = (side == 0) ? integrate_fn(f, lo, hi, s)
                                      : integrate_fn(f, -hi, -lo, s);
            double mag = norm(piece);
            if (!std::isfinite(mag)) throw Divergent("integrand not finite in the tail");
            add(acc, piece);
            double scale = std::max(1e-300, norm(acc));
            if (mag <= std::max(s.abs_tol, s.rel_tol * scale)) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
            // patient growth rule: transforms with strong exponential skew
            // produce long pre-asymptotic humps before the base density wins
            if (prev_mag >= 0.0 && mag > prev_mag * 1.5 && mag > s.abs_tol) {
                if (++growing >= 6) throw Divergent("tail contribution grows");
            } else {
                growing = 0;
            }
            prev_mag = mag;
            lo = hi;
        }
        if (quiet < 2) {
            // never settled: either divergent or pathologically slow decay
            throw Divergent("tail contribution did not decay");
        }
    }
    return acc;
}

}  // namespace

double integrate_real_line(const std::function<double(double)>& f, double w0,
                           const QuadratureSettings& settings) {
    auto integ = [](const std::function<double(double)>& fn, double a, double b,
                    const QuadratureSettings& s) { return integrate(fn, a, b, s).value; };
    auto norm = [](double v) { return std::fabs(v); };
    return real_line_driver<double>(f, w0, settings, integ, norm, add1);
}

std::array<double, 4> integrate_real_line4(const VectorIntegrand<4>& f, double w0,
                                           const QuadratureSettings& settings) {
    auto integ = [](const VectorIntegrand<4>& fn, double a, double b,
                    const QuadratureSettings& s) { return integrate4(fn, a, b, s); };
    auto norm = [](const V4& v) { return errnorm4(v, V4{}); };
    return real_line_driver<V4>(f, w0, settings, integ, norm, add4);
}

}  // namespace quantfam
