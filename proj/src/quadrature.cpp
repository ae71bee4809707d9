#include "auxzeta/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace auxzeta {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

Complex checked_eval(const Integrand &f, double x) {
    const Complex v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "integrand blew up at x = %.17g", x);
        throw IntegrandError(buf, x);
    }
    return v;
}

struct Segment {
    double lo;
    double hi;
    Complex value;
    double error;
    bool splittable;
};

Segment make_segment(const Integrand &f, double lo, double hi) {
    const PanelEstimate p = gauss_kronrod_15(f, lo, hi);
    // Too narrow to bisect: the midpoint collapses onto an endpoint.
    const double mid = 0.5 * (lo + hi);
    const bool splittable = mid > lo && mid < hi;
    return {lo, hi, p.kronrod, p.error, splittable};
}

} // namespace

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw std::invalid_argument("interval endpoints must be finite");
    if (!(lo < hi))
        throw std::invalid_argument("interval requires lo < hi");
}

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(tail_threshold > 0.0))
        throw std::invalid_argument("quadrature tolerances must be strictly positive");
    if (max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be at least 1");
}

QuadratureResult &QuadratureResult::operator+=(const QuadratureResult &other) {
    value += other.value;
    error_estimate += other.error_estimate;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
}

QuadratureResult operator+(QuadratureResult lhs, const QuadratureResult &rhs) {
    lhs += rhs;
    return lhs;
}

PanelEstimate gauss_kronrod_15(const Integrand &f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    std::array<Complex, 15> fv;
    fv[7] = checked_eval(f, center);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        fv[j] = checked_eval(f, center - dx);
        fv[14 - j] = checked_eval(f, center + dx);
    }

    Complex kronrod = kKronrodWeights[7] * fv[7];
    Complex gauss = kGaussWeights[3] * fv[7];
    double abs_sum = kKronrodWeights[7] * std::abs(fv[7]);
    for (std::size_t j = 0; j < 7; ++j) {
        const Complex pair = fv[j] + fv[14 - j];
        kronrod += kKronrodWeights[j] * pair;
        abs_sum += kKronrodWeights[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1)
            gauss += kGaussWeights[j / 2] * pair;
    }

    const Complex mean = 0.5 * kronrod;
    double asc = kKronrodWeights[7] * std::abs(fv[7] - mean);
    for (std::size_t j = 0; j < 7; ++j)
        asc += kKronrodWeights[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

    const double scale = std::abs(half);
    kronrod *= half;
    gauss *= half;
    abs_sum *= scale;
    asc *= scale;

    // QUADPACK error heuristic: scaled Gauss/Kronrod gap with a roundoff floor.
    double err = std::abs(kronrod - gauss);
    if (asc != 0.0 && err != 0.0)
        err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
    if (abs_sum > kTiny / (50.0 * kEps))
        err = std::max(50.0 * kEps * abs_sum, err);

    return {kronrod, gauss, err};
}

QuadratureResult integrate_finite(const Integrand &f, const Interval &iv,
                                  const QuadratureConfig &cfg) {
    cfg.validate();

    std::vector<Segment> segments;
    segments.reserve(static_cast<std::size_t>(cfg.max_subdivisions) + 1);
    segments.push_back(make_segment(f, iv.lo, iv.hi));
    long evaluations = 15;

    QuadratureResult out;
    for (;;) {
        // Segments stay ordered by position, so the sums are reproducible.
        Complex total{0.0, 0.0};
        double total_err = 0.0;
        for (const Segment &s : segments) {
            total += s.value;
            total_err += s.error;
        }
        out.value = total;
        out.error_estimate = total_err;

        if (total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
            out.converged = true;
            break;
        }
        if (segments.size() >= static_cast<std::size_t>(cfg.max_subdivisions)) {
            out.converged = false;
            break;
        }

        std::size_t worst = segments.size();
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (!segments[i].splittable)
                continue;
            if (worst == segments.size() || segments[i].error > segments[worst].error)
                worst = i;
        }
        if (worst == segments.size()) {
            out.converged = false;
            break;
        }

        const double lo = segments[worst].lo;
        const double hi = segments[worst].hi;
        const double mid = 0.5 * (lo + hi);
        segments[worst] = make_segment(f, lo, mid);
        segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                        make_segment(f, mid, hi));
        evaluations += 30;
    }
    out.evaluations = evaluations;
    return out;
}

double decay_tail_bound(const DecayBound &decay, double x) {
    constexpr double kFirstPanel = 1.0 / 64.0;
    constexpr int kMaxPanels = 120;

    double sum = 0.0;
    double offset = 0.0;
    double width = kFirstPanel;
    for (int k = 0; k < kMaxPanels; ++k) {
        const double d = decay(x + offset);
        if (std::isnan(d) || d < 0.0)
            throw std::invalid_argument("decay bound must be a non-negative number");
        const double term = width * d;
        if (!std::isfinite(term))
            return std::numeric_limits<double>::infinity();
        sum += term;
        if (term == 0.0 || (k >= 4 && term <= 1e-6 * sum))
            return sum;
        offset += width;
        width *= 2.0;
    }
    return std::numeric_limits<double>::infinity();
}

double truncation_point(const DecayBound &decay, double lo, double threshold) {
    constexpr double kHorizon = 1e6;
    constexpr int kBisections = 40;

    if (decay_tail_bound(decay, lo) < threshold)
        return lo;

    double step = 0.125;
    double bad = lo;
    double good = lo + step;
    while (!(decay_tail_bound(decay, good) < threshold)) {
        bad = good;
        step *= 2.0;
        if (step > kHorizon)
            throw TruncationError("cannot truncate: decay bound stays above the tail "
                                  "threshold within the sanity horizon");
        good = lo + step;
    }
    for (int i = 0; i < kBisections; ++i) {
        const double mid = 0.5 * (bad + good);
        if (mid <= bad || mid >= good)
            break;
        if (decay_tail_bound(decay, mid) < threshold)
            good = mid;
        else
            bad = mid;
    }
    return good;
}

QuadratureResult integrate_semi_infinite(const Integrand &f, double lo,
                                         const DecayBound &decay,
                                         const QuadratureConfig &cfg) {
    cfg.validate();
    if (!std::isfinite(lo))
        throw std::invalid_argument("semi-infinite lower limit must be finite");

    const double cut = truncation_point(decay, lo, cfg.tail_threshold);
    const double tail = decay_tail_bound(decay, cut);

    QuadratureResult out;
    if (cut > lo)
        out = integrate_finite(f, Interval(lo, cut), cfg);
    out.error_estimate += tail;
    out.converged = out.converged &&
                    out.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

} // namespace auxzeta
