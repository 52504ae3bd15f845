#include "tlcasimir/quadrature.hpp"

#include "tlcasimir/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlcasimir {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

constexpr int kInitialPanels = 40;

struct Panel {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

class PanelRule {
public:
    explicit PanelRule(const std::function<double(double)>& f) : f_(f) {}

    Panel apply(double a, double b) {
        const double centre = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        const auto& x = Kronrod::abscissa();
        const auto& wk = Kronrod::weights();
        const auto& wg = Gauss::weights();

        // Node 0 is shared by both rules; even indices are the Gauss nodes.
        const double f0 = sample(centre);
        double kronrod = f0 * wk[0];
        double gauss = f0 * wg[0];
        for (std::size_t i = 1; i < x.size(); ++i) {
            const double pair = sample(centre + half * x[i]) + sample(centre - half * x[i]);
            kronrod += pair * wk[i];
            if (i % 2 == 0) gauss += pair * wg[i / 2];
        }
        return {a, b, kronrod * half, std::abs(kronrod - gauss) * half};
    }

    std::size_t evaluations() const { return evaluations_; }

private:
    double sample(double u) {
        ++evaluations_;
        const double v = f_(u);
        if (!std::isfinite(v)) {
            throw NumericalError("non-finite integrand at u = " + std::to_string(u));
        }
        return v;
    }

    const std::function<double(double)>& f_;
    std::size_t evaluations_ = 0;
};

} // namespace

void QuadratureConfig::validate() const {
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(rel_tol) || !positive(abs_tol)) {
        throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_subdivisions == 0) {
        throw std::invalid_argument("max_subdivisions must be positive");
    }
    if (!positive(tail_constant) || !positive(min_cutoff)) {
        throw std::invalid_argument("tail constant and minimum cutoff must be positive");
    }
}

double exponential_tail_bound(double cutoff, double tail_constant) {
    return tail_constant * (2.0 * cutoff + 1.0) * std::exp(-2.0 * cutoff) / 4.0;
}

double choose_cutoff(const QuadratureConfig& cfg) {
    double cutoff = cfg.min_cutoff;
    while (exponential_tail_bound(cutoff, cfg.tail_constant) >= cfg.abs_tol / 10.0) {
        cutoff += 0.0625;
    }
    return cutoff;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& integrand,
                                         const QuadratureConfig& cfg) {
    cfg.validate();
    QuadratureResult result;
    result.cutoff = choose_cutoff(cfg);
    result.tail_bound = exponential_tail_bound(result.cutoff, cfg.tail_constant);

    PanelRule rule(integrand);
    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_error = 0.0;
    auto push = [&](const Panel& p) {
        panels.push(p);
        total += p.value;
        total_error += p.error;
    };

    double upper = result.cutoff;
    for (int k = 0; k < kInitialPanels; ++k) {
        const double lower = 0.5 * upper;
        push(rule.apply(lower, upper));
        upper = lower;
    }
    push(rule.apply(0.0, upper));

    while (total_error + result.tail_bound > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        if (result.subdivisions >= cfg.max_subdivisions) {
            throw NumericalError("quadrature did not converge within " + std::to_string(cfg.max_subdivisions) +
                                 " subdivisions (error estimate " + std::to_string(total_error) + ")");
        }
        const Panel worst = panels.top();
        panels.pop();
        total -= worst.value;
        total_error -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push(rule.apply(worst.a, mid));
        push(rule.apply(mid, worst.b));
        ++result.subdivisions;
    }

    // Re-sum to shed the drift of the running totals.
    total = 0.0;
    total_error = 0.0;
    while (!panels.empty()) {
        total += panels.top().value;
        total_error += panels.top().error;
        panels.pop();
    }
    result.value = total;
    result.error_estimate = total_error + result.tail_bound;
    result.evaluations = rule.evaluations();
    return result;
}

} // namespace tlcasimir
