#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpd/rational_function.hpp"

namespace dpd {

// A point of P^1 over Q(i): either a finite Gaussian-rational coordinate or
// the point at infinity.  The total order lists finite points first (real part
// ascending, then |imaginary part|, then the positive-imaginary member) and
// puts infinity last; every printed enumeration follows it.
class CurvePoint {
public:
    explicit CurvePoint(GaussianRational value) : finite_(true), value_(std::move(value)) {}
    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }
    const GaussianRational& value() const;

    bool is_real() const { return !finite_ || value_.is_real(); }
    CurvePoint conj() const {
        return finite_ ? CurvePoint(value_.conj()) : CurvePoint::infinity();
    }

    std::string str() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
        if (a.finite_ && b.finite_) return gauss_less(a.value_, b.value_);
        return a.finite_ && !b.finite_; // finite < infinity; infinity == infinity
    }

private:
    CurvePoint() : finite_(false) {}
    bool finite_;
    GaussianRational value_;
};

enum class CurveKind { IntervalType, CircleType };

// A smooth rational real affine curve C = P^1 \ S presented by its removed
// set S, which must be nonempty and stable under conjugation.
class RealCurve {
public:
    explicit RealCurve(std::vector<CurvePoint> removed);

    static RealCurve affine_line(); // S = {inf}
    static RealCurve circle();      // S = {i, -i}

    const std::vector<CurvePoint>& removed() const { return removed_; }
    bool contains(const CurvePoint& p) const;
    bool has_real_removed() const;

    // IntervalType when S contains a real point (the real locus of C is a
    // union of intervals), CircleType when S is entirely non-real (the real
    // locus is the whole circle P^1(R)).
    CurveKind kind() const {
        return has_real_removed() ? CurveKind::IntervalType : CurveKind::CircleType;
    }

    // The distinguished correction point: the smallest finite member of S.
    std::optional<CurvePoint> smallest_finite_removed() const;

    std::string str() const; // "P1 minus [inf]"

    friend bool operator==(const RealCurve& a, const RealCurve& b) {
        return a.removed_ == b.removed_;
    }
    friend bool operator!=(const RealCurve& a, const RealCurve& b) { return !(a == b); }

private:
    std::vector<CurvePoint> removed_; // sorted, deduplicated
};

// A Weil Q-divisor: a finite formal sum of curve points with rational
// coefficients.  Zero coefficients are never stored.
class QDivisor {
public:
    QDivisor() = default;
    static QDivisor single(const CurvePoint& p, const Rational& coeff);

    Rational at(const CurvePoint& p) const;
    void add_term(const CurvePoint& p, const Rational& coeff); // accumulates
    const std::map<CurvePoint, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;
    Rational degree() const; // sum of coefficients

    QDivisor operator-() const;
    friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
    friend QDivisor operator-(const QDivisor& a, const QDivisor& b) { return a + (-b); }
    friend QDivisor operator*(const Rational& s, const QDivisor& d);
    friend bool operator==(const QDivisor& a, const QDivisor& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QDivisor& a, const QDivisor& b) { return !(a == b); }

    QDivisor pullback_tau() const; // coefficient at p becomes value at conj(p)
    QDivisor floor() const;        // coefficient-wise round-down

    // Drops every term whose point is not on the curve.
    QDivisor restrict_to(const RealCurve& curve) const;

    std::string str() const; // "1/2*[-1] + 1/2*[1]", "0" when empty

private:
    std::map<CurvePoint, Rational> terms_;
};

// Pointwise comparison with default coefficient 0.
bool divisor_leq(const QDivisor& d1, const QDivisor& d2);

// div(h) restricted to the curve: orders at all finite zeros/poles of h that
// lie on C, plus the order at infinity when infinity is on C.
QDivisor principal_divisor(const RationalFunction& h, const RealCurve& curve);

// Order of vanishing of a nonzero function at a point of P^1.
int order_at_point(const RationalFunction& h, const CurvePoint& p);

// True when f has no pole on the curve (all denominator roots lie in the
// removed set, and the order at infinity is nonnegative when infinity is on
// the curve).  Does not require f to split over Q(i).
bool regular_on_curve(const RationalFunction& f, const RealCurve& curve);

} // namespace dpd
