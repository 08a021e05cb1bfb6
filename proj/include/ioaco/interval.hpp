#ifndef IOACO_INTERVAL_HPP
#define IOACO_INTERVAL_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace ioaco {

/// Closed real interval [lo, hi]. A degenerate interval (lo == hi)
/// represents a plain real number; degeneracy is tested bitwise because
/// it is a structural property of how the value was constructed, not a
/// numerical accident.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool degenerate() const { return lo == hi; }
    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
};

inline Interval make_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("interval limits must be finite");
    }
    if (lo > hi) {
        throw std::invalid_argument("interval lower limit " + std::to_string(lo) +
                                    " exceeds upper limit " + std::to_string(hi));
    }
    return Interval{lo, hi};
}

inline Interval degenerate(double v) { return Interval{v, v}; }

inline Interval add(Interval d, Interval e) { return Interval{d.lo + e.lo, d.hi + e.hi}; }

inline Interval negate(Interval e) { return Interval{-e.hi, -e.lo}; }

/// Credibility that a realization drawn from e is at least a realization
/// drawn from d. Piecewise-clamped ratio of the overlap reach to the
/// combined widths; when both intervals are real numbers the comparison
/// collapses to the crisp e >= d.
inline double possibility(Interval e, Interval d) {
    const double span = e.width() + d.width();
    if (span == 0.0) {
        return e.lo >= d.lo ? 1.0 : 0.0;
    }
    const double p = (e.hi - d.lo) / span;
    if (p > 1.0) return 1.0;
    if (p < 0.0) return 0.0;
    return p;
}

inline bool interval_geq(Interval e, Interval d) { return possibility(e, d) >= 0.5; }

inline bool interval_gt(Interval e, Interval d) { return possibility(e, d) > 0.5; }

} // namespace ioaco

#endif
