#include "pantostar/star_system.hpp"

#include <cmath>
#include <string>

namespace pantostar {

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

} // namespace

StarSystem StarSystem::validate(StarSystemSpec spec) {
    if (spec.m < 2) {
        throw ValidationError(ValidationIssue::too_few_edges,
                              "TooFewEdges: need m >= 2 edges, got m=" + std::to_string(spec.m));
    }
    if (!std::isfinite(spec.q) || spec.q <= 1.0) {
        throw ValidationError(ValidationIssue::q_out_of_range,
                              "QOutOfRange: delay factor must satisfy q > 1");
    }
    const auto n = static_cast<std::size_t>(spec.m);
    if (!spec.alpha) {
        // Probabilistic default: unit weight on the root, scenario weights
        // summing to one across the outgoing edges.
        std::vector<double> alpha(n, 1.0 / static_cast<double>(spec.m - 1));
        alpha[0] = 1.0;
        spec.alpha = std::move(alpha);
    }
    if (spec.horizons.size() != n || spec.a.size() != n || spec.b.size() != n ||
        spec.c.size() != n || spec.alpha->size() != n) {
        throw ValidationError(ValidationIssue::bad_shape,
                              "BadShape: T, a, b, c, alpha must each have one entry per edge");
    }
    if (!all_finite(spec.horizons) || !all_finite(spec.a) || !all_finite(spec.b) ||
        !all_finite(spec.c) || !all_finite(*spec.alpha) || !std::isfinite(spec.y0)) {
        throw ValidationError(ValidationIssue::bad_shape, "BadShape: non-finite value in input");
    }
    if (spec.horizons[0] <= 0.0) {
        throw ValidationError(ValidationIssue::horizon_too_short,
                              "HorizonTooShort: T_1 must be positive");
    }
    const double switch_time = (spec.q - 1.0) * spec.horizons[0];
    for (std::size_t j = 1; j < n; ++j) {
        if (spec.horizons[j] <= switch_time) {
            throw ValidationError(ValidationIssue::horizon_too_short,
                                  "HorizonTooShort: edge " + std::to_string(j + 1) +
                                      " needs T_j > (q-1)T_1");
        }
    }
    for (double w : *spec.alpha) {
        if (w <= 0.0) {
            throw ValidationError(ValidationIssue::nonpositive_weight,
                                  "NonpositiveWeight: all weights must be > 0");
        }
    }

    StarSystem sys;
    sys.m_ = spec.m;
    sys.q_ = spec.q;
    sys.y0_ = spec.y0;
    sys.horizons_ = std::move(spec.horizons);
    sys.a_ = std::move(spec.a);
    sys.b_ = std::move(spec.b);
    sys.c_ = std::move(spec.c);
    sys.alpha_ = std::move(*spec.alpha);
    sys.lengths_.resize(n);
    sys.lengths_[0] = sys.horizons_[0];
    for (std::size_t j = 1; j < n; ++j) {
        sys.lengths_[j] = (sys.horizons_[j] - switch_time) / sys.q_;
    }
    return sys;
}

HypothesisReport classify_hypotheses(const StarSystem& sys) {
    HypothesisReport report;
    const double critical = 1.0 / std::sqrt(sys.q());
    report.margin = std::abs(std::abs(sys.coeff_a(1)) - critical);

    double tail = 0.0;
    bool all_zero = sys.coeff_a(1) == 0.0;
    for (int j = 2; j <= sys.edge_count(); ++j) {
        tail += std::abs(sys.coeff_a(j));
        all_zero = all_zero && sys.coeff_a(j) == 0.0;
    }
    report.neutral_ok = report.margin > kHypothesisTolerance * critical && tail > 0.0;
    report.retarded = all_zero;
    report.guaranteed = report.neutral_ok || report.retarded;
    return report;
}

} // namespace pantostar
