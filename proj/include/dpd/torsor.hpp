#pragma once

#include <optional>
#include <string>

#include "dpd/curve.hpp"
#include "dpd/rational_function.hpp"

namespace dpd {

// Circle-action torsors over a punctured projective line, encoded as a pair
// (E, h): E an integral divisor presenting the invertible module O(E), and h a
// real nonzero function with E + tau*E = -div(h) on the curve.

struct NormWitness {
    RationalFunction g;
    Rational lambda; // positive
};

struct NormObstruction {
    enum class Kind { OddOrderAt, NegativeSign };
    Kind kind = Kind::NegativeSign;
    std::optional<CurvePoint> point; // engaged for OddOrderAt

    friend bool operator==(const NormObstruction& a, const NormObstruction& b) {
        return a.kind == b.kind && a.point == b.point;
    }
};

std::string obstruction_str(const NormObstruction& o);

// Outcome of the norm equation h = lambda * g * tau*g.  Exactly one of
// witness/obstruction is engaged; a returned witness has been re-verified.
struct NormResult {
    std::optional<NormWitness> witness;
    std::optional<NormObstruction> obstruction;

    bool trivial() const { return witness.has_value(); }
};

// Decides solvability of h = lambda * g * tau*g with g over Q(i) and lambda a
// positive rational.  Solvable iff every real point of the projective line
// (removed points and infinity included: norms have even order everywhere on
// the real circle) carries even order and the constant sign of h is positive.
// The obstruction point is the first odd-order point in the order: 0, then
// positive reals ascending, then negative reals ascending, infinity last.
NormResult norm_equation(const RationalFunction& h, const RealCurve& curve);

// The two torsors over a single real point, indexed by the sign of the scalar.
enum class PointTorsor { CircleTorsor, HatCircleTorsor };

PointTorsor torsor_over_point(const Rational& c);

class TorsorPair {
public:
    TorsorPair(RealCurve curve, QDivisor E, RationalFunction h);

    const RealCurve& curve() const { return curve_; }
    const QDivisor& E() const { return E_; }
    const RationalFunction& h() const { return h_; }

private:
    RealCurve curve_;
    QDivisor E_;
    RationalFunction h_;
};

// Validates E + tau*E = -div(h)|_C; reports a violating point on failure.
TorsorPair torsor_pair_validate(const RealCurve& curve, const QDivisor& E,
                                const RationalFunction& h);

// Isomorphism certificate t1 -> t2: a divisor shift f0 with div(f0)|_C =
// E2 - E1 plus the norm witness for the residual scalar part, so that
// h2 = lambda * F * tau*F * h1 identically where F = f0 * g.
struct TorsorIso {
    RationalFunction f0;
    NormWitness residual;

    RationalFunction combined() const { return f0 * residual.g; }
};

struct TorsorIsoResult {
    std::optional<TorsorIso> iso;
    std::optional<NormObstruction> obstruction;

    bool isomorphic() const { return iso.has_value(); }
};

// Decides isomorphism over a common curve by solving the norm equation for
// h2 / (h1 * f0 * tau*f0) where f0 realizes the divisor shift E2 - E1.
TorsorIsoResult torsor_iso(const TorsorPair& t1, const TorsorPair& t2);

// A function whose divisor restricted to the curve is exactly the given
// integral divisor (the Picard group of the punctured line is trivial).
RationalFunction function_with_divisor(const QDivisor& target, const RealCurve& curve);

} // namespace dpd
