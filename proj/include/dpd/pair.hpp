#pragma once

#include <optional>
#include <vector>

#include "dpd/curve.hpp"

namespace dpd {

// An equivalence twist: a nonzero split rational function f together with a
// positive rational scalar lambda.  Acting on a pair it adds div(f) to the
// divisor and multiplies h by lambda * f * conj(f).
struct TwistData {
    RationalFunction f;
    Rational lambda;

    TwistData(RationalFunction f_, Rational lambda_);
    bool is_trivial() const {
        return f == RationalFunction(GaussianRational(1)) && lambda == Rational(1);
    }
};

// A real DPD-pair: a real affine curve C = P^1 \ S, a Weil Q-divisor D
// supported on C, and a nonzero real rational function h subject to the
// validity inequality D + tau*D <= div(h) on C.  Construction validates.
class DpdPair {
public:
    DpdPair(RealCurve curve, QDivisor D, RationalFunction h);

    const RealCurve& curve() const { return curve_; }
    const QDivisor& D() const { return D_; }
    const RationalFunction& h() const { return h_; }
    const QDivisor& div_h() const { return div_h_; } // div(h) restricted to the curve

    friend bool operator==(const DpdPair& a, const DpdPair& b) {
        return a.curve_ == b.curve_ && a.D_ == b.D_ && a.h_ == b.h_;
    }
    friend bool operator!=(const DpdPair& a, const DpdPair& b) { return !(a == b); }

private:
    RealCurve curve_;
    QDivisor D_;
    RationalFunction h_;
    QDivisor div_h_;
};

// Checked constructor (throws NotReal / ZeroFunction / SemanticError /
// ValidityViolation / NonGaussianRoots).
DpdPair dpd_validate(const RealCurve& curve, const QDivisor& D, const RationalFunction& h);

// D_minus = tau*D - div(h)|_C; always satisfies D + D_minus <= 0.
QDivisor dpd_d_minus(const DpdPair& pair);

// Two rationals r_i = p_i/q_i in lowest terms (q_i > 0) form a regular pair
// when |p1*q2 - p2*q1| = 1.
bool regular_pair(const Rational& r1, const Rational& r2);

struct RegularityResult {
    bool regular = true;
    // On failure: the first offending curve point in point order, together
    // with the fractions (D(p), D(conj p) - ord_p(h)) tested there.
    std::optional<CurvePoint> witness;
    Rational r1, r2;
};

// Smoothness test: at every curve point with strict validity inequality the
// local fractions must form a regular pair.  Points with equality impose no
// condition.
RegularityResult dpd_is_regular(const DpdPair& pair);

// (curve, D + div(f)|_C, lambda * f * conj(f) * h); preserves validity and
// regularity.
DpdPair dpd_twist(const DpdPair& pair, const TwistData& t);

struct LocalReduction {
    DpdPair pair;
    TwistData twist;
};

// Twist by (z - c)^(-floor(D(c))) at a finite real curve point c, leaving the
// divisor coefficient at c inside [0,1).
LocalReduction dpd_local_reduce(const DpdPair& pair, const CurvePoint& c);

// Remove a conjugation-stable set of non-real curve points (shrinks the
// curve, drops their divisor coefficients, keeps h).
DpdPair dpd_restrict(const DpdPair& pair, const std::vector<CurvePoint>& points);

// Re-add removed non-real points where h is a unit (ord = 0), extending D
// by 0 there; inverse of dpd_restrict when h was untouched.
DpdPair dpd_extend(const DpdPair& pair, const std::vector<CurvePoint>& points);

// Extension that may also cross real removed points when the fiber over them
// would have no real points (ord_p(h) = 0 and h(p) < 0), so the real locus is
// unchanged.  Used by the normalizer; dpd_extend is the strict variant.
DpdPair dpd_extend_allow_negative_real(const DpdPair& pair,
                                       const std::vector<CurvePoint>& points);

// Generator of the degree-n graded piece: a rational function g_n with
// ord_p(g_n) = -E(p) at every curve point, where E = floor(n*D) for n >= 0
// and E = floor((-n)*D_minus) for n < 0.
RationalFunction section_generator(const DpdPair& pair, long n);

// The ring involution on the degree-n piece: f |-> h^n * conj(f), landing in
// degree -n.  Throws NotInPiece when f is not in the degree-n piece.
RationalFunction sigma_on_section(const DpdPair& pair, long n, const RationalFunction& f);

// Membership test for the graded piece of degree n: f / g_n regular on C.
bool in_graded_piece(const DpdPair& pair, long n, const RationalFunction& f);

struct Generator {
    long degree;
    RationalFunction f;
};

// A monomial relation: prod_i gen_i^exponents[i] = rhs, where rhs is a
// rational function of z (an element of the degree-0 part).
struct Relation {
    std::vector<long> exponents;
    RationalFunction rhs;
};

struct PresentationReport {
    bool ok = true;
    int failed_relation = -1; // index into the relations list when !ok
    std::string detail;
};

// Checks each generator lies in its graded piece (NotInPiece otherwise), then
// verifies every relation: exponents must be nonnegative, the monomial must
// have total degree 0, and the function identity must hold.
PresentationReport verify_presentation(const DpdPair& pair,
                                       const std::vector<Generator>& generators,
                                       const std::vector<Relation>& relations);

} // namespace dpd
