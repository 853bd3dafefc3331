#pragma once

#include <cstddef>
#include <vector>

namespace pantostar {

/// Piecewise-affine function with possible jumps at its breakpoints.
///
/// The function is stored as a strictly increasing breakpoint list and one
/// affine piece per cell, in global coordinates: on the i-th cell the value
/// is slope(i)*t + offset(i). Values exactly *at* a breakpoint are never
/// needed by the integration machinery; one-sided limits are explicit in the
/// interface. Outside the stored domain the function is implicitly zero,
/// which is what makes support-trimmed operator images composable: sums and
/// products treat missing coverage as zero.
///
/// Images of the delay operators applied to piecewise-linear trial functions
/// live in this class, and all energy integrals reduce to exact two-point
/// Gauss quadrature of piecewise-quadratic integrands on merged breakpoint
/// lists.
class BreakpointFunction {
public:
    BreakpointFunction() = default;

    static BreakpointFunction zero(double lo, double hi);
    static BreakpointFunction constant(double lo, double hi, double value);
    /// breaks.size() == slopes.size() + 1 == offsets.size() + 1, breaks strictly increasing.
    static BreakpointFunction from_pieces(std::vector<double> breaks, std::vector<double> slopes,
                                          std::vector<double> offsets);

    bool empty() const { return breaks_.empty(); }
    double lo() const { return breaks_.front(); }
    double hi() const { return breaks_.back(); }
    std::size_t piece_count() const { return slopes_.size(); }
    const std::vector<double>& breakpoints() const { return breaks_; }
    double slope(std::size_t i) const { return slopes_[i]; }
    double offset(std::size_t i) const { return offsets_[i]; }

    /// One-sided limits; outside the stored domain the value is zero.
    double eval_left(double t) const;
    double eval_right(double t) const;

    /// g(t) = this(scale*t + shift) on [lo, hi] intersected with the preimage
    /// of the stored domain. Requires scale > 0.
    BreakpointFunction composed_affine(double scale, double shift, double lo, double hi) const;

    BreakpointFunction scaled(double factor) const;
    BreakpointFunction restricted(double lo, double hi) const;

    /// Drops leading/trailing pieces that are exactly zero; interior zero gaps
    /// are kept so the representation stays contiguous.
    BreakpointFunction trimmed() const;

    /// Pointwise sum with zero extension outside either domain.
    friend BreakpointFunction add(const BreakpointFunction& f, const BreakpointFunction& g);

    /// Splices two functions whose domains meet end-to-start.
    static BreakpointFunction concat(const BreakpointFunction& head, const BreakpointFunction& tail);

    double integral() const;
    double integral(double a, double b) const;
    double average(double a, double b) const;

    /// Largest |left limit - right limit| over breakpoints strictly inside
    /// (a, b); a stored-domain boundary strictly inside the window counts as a
    /// jump against the implicit zero.
    double max_interior_jump(double a, double b) const;

    /// Piece index owning the open cell that t falls in, preferring the cell
    /// to the right of t when t is a breakpoint. Returns npos outside.
    std::size_t piece_right_of(double t) const;
    std::size_t piece_left_of(double t) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<double> breaks_;
    std::vector<double> slopes_;
    std::vector<double> offsets_;
};

bool hulls_overlap(const BreakpointFunction& f, const BreakpointFunction& g);

/// Exact integral of f*g over the intersection of the stored domains
/// (two-point Gauss per merged cell; the integrand is piecewise quadratic).
double integrate_product(const BreakpointFunction& f, const BreakpointFunction& g);

BreakpointFunction add(const BreakpointFunction& f, const BreakpointFunction& g);

} // namespace pantostar
