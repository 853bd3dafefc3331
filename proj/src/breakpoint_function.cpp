#include "pantostar/breakpoint_function.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace pantostar {

namespace {

constexpr double kMergeTol = 1e-14;
const double kGaussNode = 1.0 / std::sqrt(3.0);

double merge_tolerance(double lo, double hi) { return kMergeTol * (hi - lo); }

// Sorted union of candidate breakpoints clipped to [lo, hi], endpoints forced.
std::vector<double> merged_grid(std::vector<double> pts, double lo, double hi) {
    pts.push_back(lo);
    pts.push_back(hi);
    std::sort(pts.begin(), pts.end());
    const double tol = merge_tolerance(lo, hi);
    std::vector<double> grid;
    grid.reserve(pts.size());
    for (double p : pts) {
        if (p < lo - tol || p > hi + tol) continue;
        p = std::clamp(p, lo, hi);
        if (grid.empty() || p - grid.back() > tol) grid.push_back(p);
    }
    if (grid.size() < 2) return {};
    grid.front() = lo;
    grid.back() = hi;
    return grid;
}

} // namespace

BreakpointFunction BreakpointFunction::zero(double lo, double hi) {
    return constant(lo, hi, 0.0);
}

BreakpointFunction BreakpointFunction::constant(double lo, double hi, double value) {
    BreakpointFunction f;
    if (hi <= lo) return f;
    f.breaks_ = {lo, hi};
    f.slopes_ = {0.0};
    f.offsets_ = {value};
    return f;
}

BreakpointFunction BreakpointFunction::from_pieces(std::vector<double> breaks,
                                                   std::vector<double> slopes,
                                                   std::vector<double> offsets) {
    if (breaks.size() != slopes.size() + 1 || slopes.size() != offsets.size()) {
        throw std::invalid_argument("BreakpointFunction: inconsistent piece arrays");
    }
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i] < breaks[i + 1])) {
            throw std::invalid_argument("BreakpointFunction: breakpoints must strictly increase");
        }
    }
    BreakpointFunction f;
    f.breaks_ = std::move(breaks);
    f.slopes_ = std::move(slopes);
    f.offsets_ = std::move(offsets);
    return f;
}

std::size_t BreakpointFunction::piece_right_of(double t) const {
    if (empty() || t < lo() || t >= hi()) return npos;
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

std::size_t BreakpointFunction::piece_left_of(double t) const {
    if (empty() || t <= lo() || t > hi()) return npos;
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

double BreakpointFunction::eval_left(double t) const {
    const std::size_t i = piece_left_of(t);
    return i == npos ? 0.0 : slopes_[i] * t + offsets_[i];
}

double BreakpointFunction::eval_right(double t) const {
    const std::size_t i = piece_right_of(t);
    return i == npos ? 0.0 : slopes_[i] * t + offsets_[i];
}

BreakpointFunction BreakpointFunction::composed_affine(double scale, double shift, double lo,
                                                       double hi) const {
    assert(scale > 0.0);
    BreakpointFunction g;
    if (empty()) return g;
    // clip the requested window to the preimage of the stored domain
    const double plo = (this->lo() - shift) / scale;
    const double phi = (this->hi() - shift) / scale;
    lo = std::max(lo, plo);
    hi = std::min(hi, phi);
    if (!(lo < hi)) return g;

    std::vector<double> candidates;
    candidates.reserve(breaks_.size());
    for (double b : breaks_) candidates.push_back((b - shift) / scale);
    const auto grid = merged_grid(std::move(candidates), lo, hi);
    if (grid.empty()) return g;

    g.breaks_ = grid;
    g.slopes_.resize(grid.size() - 1);
    g.offsets_.resize(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        std::size_t src = piece_right_of(scale * mid + shift);
        if (src == npos) src = piece_left_of(scale * mid + shift);
        if (src == npos) {
            g.slopes_[i] = 0.0;
            g.offsets_[i] = 0.0;
        } else {
            g.slopes_[i] = slopes_[src] * scale;
            g.offsets_[i] = slopes_[src] * shift + offsets_[src];
        }
    }
    return g;
}

BreakpointFunction BreakpointFunction::scaled(double factor) const {
    BreakpointFunction g = *this;
    for (double& s : g.slopes_) s *= factor;
    for (double& o : g.offsets_) o *= factor;
    return g;
}

BreakpointFunction BreakpointFunction::restricted(double lo, double hi) const {
    BreakpointFunction g;
    if (empty()) return g;
    lo = std::max(lo, this->lo());
    hi = std::min(hi, this->hi());
    if (!(lo < hi)) return g;
    const auto grid = merged_grid(std::vector<double>(breaks_.begin(), breaks_.end()), lo, hi);
    if (grid.empty()) return g;
    g.breaks_ = grid;
    g.slopes_.resize(grid.size() - 1);
    g.offsets_.resize(grid.size() - 1);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        const std::size_t src = piece_right_of(mid);
        g.slopes_[i] = src == npos ? 0.0 : slopes_[src];
        g.offsets_[i] = src == npos ? 0.0 : offsets_[src];
    }
    return g;
}

BreakpointFunction BreakpointFunction::trimmed() const {
    std::size_t first = 0;
    std::size_t last = piece_count();
    while (first < last && slopes_[first] == 0.0 && offsets_[first] == 0.0) ++first;
    while (last > first && slopes_[last - 1] == 0.0 && offsets_[last - 1] == 0.0) --last;
    if (first == 0 && last == piece_count()) return *this;
    BreakpointFunction g;
    if (first == last) return g;
    g.breaks_.assign(breaks_.begin() + static_cast<std::ptrdiff_t>(first),
                     breaks_.begin() + static_cast<std::ptrdiff_t>(last + 1));
    g.slopes_.assign(slopes_.begin() + static_cast<std::ptrdiff_t>(first),
                     slopes_.begin() + static_cast<std::ptrdiff_t>(last));
    g.offsets_.assign(offsets_.begin() + static_cast<std::ptrdiff_t>(first),
                      offsets_.begin() + static_cast<std::ptrdiff_t>(last));
    return g;
}

BreakpointFunction add(const BreakpointFunction& f, const BreakpointFunction& g) {
    if (f.empty()) return g;
    if (g.empty()) return f;
    const double lo = std::min(f.lo(), g.lo());
    const double hi = std::max(f.hi(), g.hi());
    std::vector<double> candidates;
    candidates.reserve(f.breaks_.size() + g.breaks_.size());
    candidates.insert(candidates.end(), f.breaks_.begin(), f.breaks_.end());
    candidates.insert(candidates.end(), g.breaks_.begin(), g.breaks_.end());
    const auto grid = merged_grid(std::move(candidates), lo, hi);

    BreakpointFunction h;
    if (grid.empty()) return h;
    h.breaks_ = grid;
    h.slopes_.resize(grid.size() - 1, 0.0);
    h.offsets_.resize(grid.size() - 1, 0.0);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        if (const std::size_t fi = f.piece_right_of(mid); fi != BreakpointFunction::npos) {
            h.slopes_[i] += f.slopes_[fi];
            h.offsets_[i] += f.offsets_[fi];
        }
        if (const std::size_t gi = g.piece_right_of(mid); gi != BreakpointFunction::npos) {
            h.slopes_[i] += g.slopes_[gi];
            h.offsets_[i] += g.offsets_[gi];
        }
    }
    return h;
}

BreakpointFunction BreakpointFunction::concat(const BreakpointFunction& head,
                                              const BreakpointFunction& tail) {
    if (head.empty()) return tail;
    if (tail.empty()) return head;
    const double tol = merge_tolerance(head.lo(), tail.hi());
    if (std::abs(head.hi() - tail.lo()) > tol) {
        throw std::invalid_argument("BreakpointFunction::concat: domains are not adjacent");
    }
    BreakpointFunction h = head;
    h.breaks_.insert(h.breaks_.end(), tail.breaks_.begin() + 1, tail.breaks_.end());
    h.slopes_.insert(h.slopes_.end(), tail.slopes_.begin(), tail.slopes_.end());
    h.offsets_.insert(h.offsets_.end(), tail.offsets_.begin(), tail.offsets_.end());
    return h;
}

double BreakpointFunction::integral() const {
    return empty() ? 0.0 : integral(lo(), hi());
}

double BreakpointFunction::integral(double a, double b) const {
    if (empty()) return 0.0;
    a = std::max(a, lo());
    b = std::min(b, hi());
    if (!(a < b)) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < piece_count(); ++i) {
        const double x0 = std::max(a, breaks_[i]);
        const double x1 = std::min(b, breaks_[i + 1]);
        if (x1 <= x0) continue;
        sum += 0.5 * slopes_[i] * (x1 * x1 - x0 * x0) + offsets_[i] * (x1 - x0);
    }
    return sum;
}

double BreakpointFunction::average(double a, double b) const {
    return integral(a, b) / (b - a);
}

double BreakpointFunction::max_interior_jump(double a, double b) const {
    if (empty()) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        const double t = breaks_[i];
        if (t <= a || t >= b) continue;
        const double left = i == 0 ? 0.0 : slopes_[i - 1] * t + offsets_[i - 1];
        const double right = i == piece_count() ? 0.0 : slopes_[i] * t + offsets_[i];
        worst = std::max(worst, std::abs(left - right));
    }
    return worst;
}

bool hulls_overlap(const BreakpointFunction& f, const BreakpointFunction& g) {
    return !f.empty() && !g.empty() && f.lo() < g.hi() && g.lo() < f.hi();
}

double integrate_product(const BreakpointFunction& f, const BreakpointFunction& g) {
    if (!hulls_overlap(f, g)) return 0.0;
    const double lo = std::max(f.lo(), g.lo());
    const double hi = std::min(f.hi(), g.hi());

    // lo < hi <= min(f.hi, g.hi), so both lookups land on valid pieces
    std::size_t fi = f.piece_right_of(lo);
    std::size_t gi = g.piece_right_of(lo);

    double sum = 0.0;
    double cur = lo;
    while (cur < hi) {
        const double fend = f.breakpoints()[fi + 1];
        const double gend = g.breakpoints()[gi + 1];
        const double next = std::min({fend, gend, hi});
        if (next > cur) {
            const double c = 0.5 * (cur + next);
            const double w = 0.5 * (next - cur);
            const double x1 = c - w * kGaussNode;
            const double x2 = c + w * kGaussNode;
            const double p1 = (f.slope(fi) * x1 + f.offset(fi)) * (g.slope(gi) * x1 + g.offset(gi));
            const double p2 = (f.slope(fi) * x2 + f.offset(fi)) * (g.slope(gi) * x2 + g.offset(gi));
            sum += w * (p1 + p2);
        }
        cur = next;
        if (fend <= cur && fi + 1 < f.piece_count()) ++fi;
        if (gend <= cur && gi + 1 < g.piece_count()) ++gi;
    }
    return sum;
}

} // namespace pantostar
