#pragma once

#include <string>

#include "dpd/curve.hpp"
#include "dpd/rational.hpp"
#include "dpd/rational_function.hpp"

namespace dpd {

// Fractional-linear reparametrization z -> (a*z + b)/(c*z + d) of the
// projective line, with rational coefficients and nonzero determinant.
// Coefficients are stored in a canonical primitive form (integer entries,
// gcd 1, first nonzero entry positive), so operator== is exact equality
// of maps.
class Mobius {
public:
    // Identity map.
    Mobius();
    // Throws InvalidMobius when a*d - b*c = 0.
    Mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

    static Mobius identity();
    // z -> a*z + b (throws InvalidMobius when a = 0).
    static Mobius affine(const Rational& a, const Rational& b);
    // z -> -z.
    static Mobius flip();
    // The unique map sending -1 -> p, 1 -> q, infinity -> r.  The three
    // target points must be real and pairwise distinct.
    static Mobius through(const CurvePoint& p, const CurvePoint& q, const CurvePoint& r);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_identity() const;
    // Fixes infinity, i.e. restricts to an affine automorphism of the line.
    bool is_affine() const { return c_.is_zero(); }

    Mobius inverse() const;
    // (this.compose(other))(z) = this(other(z)).
    Mobius compose(const Mobius& other) const;

    // Image of a point of P^1 (complex values welcome).
    CurvePoint apply(const CurvePoint& p) const;

    // Substitution h ∘ psi.  Exact; never divides by zero because psi is an
    // automorphism of P^1.
    RationalFunction pullback(const RationalFunction& h) const;
    // Divisor with coefficient D(psi(p)) at p, i.e. support carried through
    // the inverse map.
    QDivisor pullback(const QDivisor& D) const;
    // P^1 minus the preimage of the removed set.
    RealCurve pullback(const RealCurve& curve) const;

    // Rendering like "(2*z + 1)/(z - 3)", "2*z", "-z", "z".
    std::string str() const;

    friend bool operator==(const Mobius& lhs, const Mobius& rhs) {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ &&
               lhs.d_ == rhs.d_;
    }
    friend bool operator!=(const Mobius& lhs, const Mobius& rhs) { return !(lhs == rhs); }

private:
    void normalize();

    Rational a_, b_, c_, d_;
};

}  // namespace dpd
