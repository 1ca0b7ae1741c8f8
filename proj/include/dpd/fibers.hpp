#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpd/pair.hpp"

namespace dpd {

// Fiber of the quotient morphism over a real curve point.
enum class RealFiberType {
    TorsorRealCircle,   // S^1-torsor with real points (a circle)
    TorsorEmptyReal,    // the nontrivial torsor: no real points
    ExceptionalMu2,     // multiplicity-2 fiber, reduction a circle with mu_2 stabilizer
    TwoLinesFixedPoint, // two affine lines crossing at a real fixed point
};

std::string fiber_type_name(RealFiberType t);
// Diagram tag: 'a' for the torsor cases, 'b' for ExceptionalMu2, 'c' for
// TwoLinesFixedPoint.
char fiber_type_letter(RealFiberType t);

// Fiber over a conjugate pair of non-real points.
struct ConjFiberType {
    enum class Kind { PrincipalPair, ExceptionalPairMultM, TwoLinesPair };
    Kind kind;
    long multiplicity = 0; // >= 2, set only for ExceptionalPairMultM

    friend bool operator==(const ConjFiberType& a, const ConjFiberType& b) {
        return a.kind == b.kind && a.multiplicity == b.multiplicity;
    }
};

std::string conj_fiber_name(const ConjFiberType& t);

// Classification over a real curve point c (finite, or infinity — handled in
// the chart w = 1/z).  With delta = floor(D(c)), r = D(c) - delta and
// e = ord_c(h) - 2*delta:
//   (r,e) = (0,0) -> torsor, tagged by the sign of the reduced value of h;
//   (r,e) = (1/2,1) -> ExceptionalMu2;  (r,e) = (0,1) -> TwoLinesFixedPoint.
RealFiberType classify_real_fiber(const DpdPair& pair, const CurvePoint& c);

// Classification over a non-real curve point q: equality D(q) + D(conj q) =
// ord_q(h) gives PrincipalPair (integral) or ExceptionalPairMultM(denominator
// of D(q)); strict inequality gives TwoLinesPair.
ConjFiberType classify_conjugate_fiber(const DpdPair& pair, const CurvePoint& q);

// A marked point on the real-locus circle of the base curve: either a real
// puncture (removed point, no fiber) or a special on-curve point carrying its
// fiber type.
struct Breakpoint {
    CurvePoint point;
    bool is_puncture = false;
    std::optional<RealFiberType> fiber;
};

// A maximal open arc between consecutive breakpoints, with a rational sample
// point and the constant generic verdict there.
struct Arc {
    Rational sample;
    RealFiberType generic; // TorsorRealCircle or TorsorEmptyReal
};

struct ConjPairFiber {
    CurvePoint q; // the positive-imaginary representative
    ConjFiberType type;
};

// Full fiber survey: breakpoints in cyclic order (finite points ascending,
// then infinity), arcs[i] following breakpoints[i] cyclically (a single
// full-circle arc when there are no breakpoints), and every non-real special
// conjugate pair.
struct FiberReport {
    std::vector<Breakpoint> breakpoints;
    std::vector<Arc> arcs;
    std::vector<ConjPairFiber> conjugate_pairs;
    bool used_infinity_chart = false; // a fiber at infinity was classified via w = 1/z
};

FiberReport fiber_report(const DpdPair& pair);

} // namespace dpd
