#pragma once

// Piecewise-linear functions: initial densities u, test functions phi.

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "trapwalk/common.hpp"

namespace trapwalk {

// Continuous piecewise-linear function on [front breakpoint, back breakpoint],
// identically zero outside. No sign restriction.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;

    PiecewiseLinear(std::vector<double> xs, std::vector<double> vs)
        : xs_(std::move(xs)), vs_(std::move(vs)) {
        if (xs_.size() != vs_.size() || xs_.size() < 2)
            throw ConfigError("piecewise-linear: need matching xs/vs with >= 2 breakpoints");
        for (std::size_t i = 1; i < xs_.size(); ++i)
            if (!(xs_[i] > xs_[i - 1]))
                throw ConfigError("piecewise-linear: breakpoints must be strictly increasing");
    }

    static PiecewiseLinear sample(const std::function<double(double)>& f, double a, double b,
                                  std::size_t n_breaks) {
        if (!(b > a) || n_breaks < 2) throw ConfigError("piecewise-linear: bad sampling range");
        std::vector<double> xs(n_breaks), vs(n_breaks);
        for (std::size_t i = 0; i < n_breaks; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(n_breaks - 1);
            xs[i] = a + (b - a) * t;
            vs[i] = f(xs[i]);
        }
        xs.front() = a;
        xs.back() = b;
        return PiecewiseLinear(std::move(xs), std::move(vs));
    }

    double eval(double x) const {
        if (xs_.empty() || x <= xs_.front() || x >= xs_.back()) {
            // outside support; endpoints included since values there are the
            // stored ones only when continuous with 0 (enforced by callers
            // that need it)
            if (!xs_.empty() && x == xs_.front()) return vs_.front();
            if (!xs_.empty() && x == xs_.back()) return vs_.back();
            return 0.0;
        }
        auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        double x0 = xs_[i - 1], x1 = xs_[i];
        double w = (x - x0) / (x1 - x0);
        return vs_[i - 1] + w * (vs_[i] - vs_[i - 1]);
    }

    double operator()(double x) const { return eval(x); }

    // Exact integral over [a, b] of the (zero-extended) function.
    double integral(double a, double b) const {
        if (xs_.empty() || b <= a) return 0.0;
        a = std::max(a, xs_.front());
        b = std::min(b, xs_.back());
        if (b <= a) return 0.0;
        double total = 0.0;
        auto it = std::upper_bound(xs_.begin(), xs_.end(), a);
        std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        if (i == 0) i = 1;
        double left = a;
        while (left < b && i < xs_.size()) {
            double right = std::min(b, xs_[i]);
            total += 0.5 * (eval(left) + eval(right)) * (right - left);
            left = right;
            ++i;
        }
        return total;
    }

    double total_variation() const {
        double tv = 0.0;
        // zero extension: variation includes the drops to zero at the ends
        if (!xs_.empty()) {
            tv += std::abs(vs_.front());
            for (std::size_t i = 1; i < vs_.size(); ++i) tv += std::abs(vs_[i] - vs_[i - 1]);
            tv += std::abs(vs_.back());
        }
        return tv;
    }

    double support_min() const { return xs_.front(); }
    double support_max() const { return xs_.back(); }
    double max_value() const { return *std::max_element(vs_.begin(), vs_.end()); }

    PiecewiseLinear mirrored() const {
        std::vector<double> xs(xs_.rbegin(), xs_.rend());
        std::vector<double> vs(vs_.rbegin(), vs_.rend());
        for (auto& x : xs) x = -x;
        return PiecewiseLinear(std::move(xs), std::move(vs));
    }

    const std::vector<double>& breakpoints() const { return xs_; }
    const std::vector<double>& values() const { return vs_; }

private:
    std::vector<double> xs_;
    std::vector<double> vs_;
};

// Nonnegative continuous compactly supported initial density. Endpoint
// values must vanish so the zero extension is continuous.
class ProfileFunction {
public:
    ProfileFunction() = default;

    explicit ProfileFunction(PiecewiseLinear f) : f_(std::move(f)) {
        for (double v : f_.values())
            if (v < 0.0) throw ConfigError("profile: values must be nonnegative");
        if (f_.values().front() != 0.0 || f_.values().back() != 0.0)
            throw ConfigError("profile: must vanish at the support endpoints");
    }

    ProfileFunction(std::vector<double> xs, std::vector<double> vs)
        : ProfileFunction(PiecewiseLinear(std::move(xs), std::move(vs))) {}

    // u(x) = x(1-x) on [0,1], sampled on a grid that contains x = 1/2 so the
    // total variation is exactly 1/2.
    static ProfileFunction parabola01(std::size_t n_breaks = 2001) {
        if (n_breaks % 2 == 0) ++n_breaks;
        return ProfileFunction(PiecewiseLinear::sample(
            [](double x) { return x * (1.0 - x); }, 0.0, 1.0, n_breaks));
    }

    // Triangular bump on [a,b] with peak value h.
    static ProfileFunction hat(double a, double b, double h = 1.0) {
        return ProfileFunction({a, 0.5 * (a + b), b}, {0.0, h, 0.0});
    }

    // Plateau at height h on [a,b] with linear ramps of the given width.
    static ProfileFunction plateau(double a, double b, double h = 1.0, double ramp = 0.05) {
        return ProfileFunction({a - ramp, a, b, b + ramp}, {0.0, h, h, 0.0});
    }

    static ProfileFunction zero() { return ProfileFunction({0.0, 1.0}, {0.0, 0.0}); }

    double operator()(double x) const { return f_.eval(x); }
    double support_min() const { return f_.support_min(); }
    double support_max() const { return f_.support_max(); }
    double max_value() const { return f_.max_value(); }
    double total_variation() const { return f_.total_variation(); }
    bool is_zero() const { return max_value() == 0.0; }

    ProfileFunction mirrored() const { return ProfileFunction(f_.mirrored()); }
    const PiecewiseLinear& shape() const { return f_; }

private:
    PiecewiseLinear f_;
};

// phi(t,x) = psi(t) * chi(x), continuous with compact support in the box
// [psi support] x [chi support].
struct TestFunction {
    PiecewiseLinear psi;  // time factor
    PiecewiseLinear chi;  // space factor

    double operator()(double t, double x) const { return psi.eval(t) * chi.eval(x); }

    // exact integral of phi(., x) over [t0, t1]
    double time_integral(double t0, double t1, double x) const {
        double c = chi.eval(x);
        if (c == 0.0) return 0.0;
        return c * psi.integral(t0, t1);
    }

    double t_max() const { return psi.support_max(); }
    double t_min() const { return psi.support_min(); }
    double x_min() const { return chi.support_min(); }
    double x_max() const { return chi.support_max(); }
    double sup_norm() const {
        double mp = 0.0, mc = 0.0;
        for (double v : psi.values()) mp = std::max(mp, std::abs(v));
        for (double v : chi.values()) mc = std::max(mc, std::abs(v));
        return mp * mc;
    }

    static TestFunction box_hat(double t0, double t1, double x0, double x1) {
        PiecewiseLinear psi({t0, 0.5 * (t0 + t1), t1}, {0.0, 1.0, 0.0});
        PiecewiseLinear chi({x0, 0.5 * (x0 + x1), x1}, {0.0, 1.0, 0.0});
        return TestFunction{std::move(psi), std::move(chi)};
    }

    // Plateau-in-time, hat-in-space: close to an indicator of the box but
    // still continuous.
    static TestFunction plateau(double t0, double t1, double x0, double x1, double ramp) {
        PiecewiseLinear psi({t0, t0 + ramp, t1 - ramp, t1}, {0.0, 1.0, 1.0, 0.0});
        PiecewiseLinear chi({x0, x0 + ramp, x1 - ramp, x1}, {0.0, 1.0, 1.0, 0.0});
        return TestFunction{std::move(psi), std::move(chi)};
    }
};

}  // namespace trapwalk
