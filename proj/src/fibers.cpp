#include "dpd/fibers.hpp"

#include <algorithm>
#include <set>

#include "dpd/errors.hpp"

namespace dpd {

namespace {

void require_regular(const DpdPair& pair) {
    RegularityResult r = dpd_is_regular(pair);
    if (!r.regular)
        fail(ErrorCode::NotRegular,
             "pair is not regular (fails at " + r.witness->str() + ")");
}

// Sign of the reduced value of h at a real point c with ord_c(h) = 2*delta:
// the exact value of h/(z-c)^{2 delta} at c, or of h*z^{2 delta} at infinity.
int reduced_sign(const RationalFunction& h, const CurvePoint& c, long delta) {
    RationalFunction reduced;
    GaussianRational v;
    if (c.is_infinity()) {
        reduced = h * pow(RationalFunction::z(), 2 * delta);
        v = reduced.value_at_infinity();
    } else {
        RationalFunction lin(Polynomial::z() - Polynomial(c.value()));
        reduced = h * pow(lin, -2 * delta);
        v = reduced.evaluate(c.value());
    }
    return v.re().sign();
}

} // namespace

std::string fiber_type_name(RealFiberType t) {
    switch (t) {
    case RealFiberType::TorsorRealCircle: return "TorsorRealCircle";
    case RealFiberType::TorsorEmptyReal: return "TorsorEmptyReal";
    case RealFiberType::ExceptionalMu2: return "ExceptionalMu2";
    case RealFiberType::TwoLinesFixedPoint: return "TwoLinesFixedPoint";
    }
    return "?";
}

char fiber_type_letter(RealFiberType t) {
    switch (t) {
    case RealFiberType::ExceptionalMu2: return 'b';
    case RealFiberType::TwoLinesFixedPoint: return 'c';
    default: return 'a';
    }
}

std::string conj_fiber_name(const ConjFiberType& t) {
    switch (t.kind) {
    case ConjFiberType::Kind::PrincipalPair: return "PrincipalPair";
    case ConjFiberType::Kind::ExceptionalPairMultM:
        return "ExceptionalPairMult" + std::to_string(t.multiplicity);
    case ConjFiberType::Kind::TwoLinesPair: return "TwoLinesPair";
    }
    return "?";
}

RealFiberType classify_real_fiber(const DpdPair& pair, const CurvePoint& c) {
    if (!c.is_real())
        fail(ErrorCode::RealPointRequired, "real fiber classification at non-real " + c.str());
    if (!pair.curve().contains(c))
        fail(ErrorCode::PointNotOnCurve, "no fiber over removed point " + c.str());
    require_regular(pair);

    Rational dc = pair.D().at(c);
    Integer delta_z = dc.floor();
    if (!delta_z.fits_slong_p()) fail(ErrorCode::LimitExceeded, "divisor coefficient too large");
    long delta = delta_z.get_si();
    Rational r = dc - Rational(delta_z);
    long e = order_at_point(pair.h(), c) - 2 * delta;

    if (r == Rational(0) && e == 0) {
        int s = reduced_sign(pair.h(), c, delta);
        return s > 0 ? RealFiberType::TorsorRealCircle : RealFiberType::TorsorEmptyReal;
    }
    if (r == Rational(1, 2) && e == 1) return RealFiberType::ExceptionalMu2;
    if (r == Rational(0) && e == 1) return RealFiberType::TwoLinesFixedPoint;
    fail(ErrorCode::Internal, "regular pair with impossible local data (r = " + r.str() +
                                  ", e = " + std::to_string(e) + ") at " + c.str());
}

ConjFiberType classify_conjugate_fiber(const DpdPair& pair, const CurvePoint& q) {
    if (q.is_real())
        fail(ErrorCode::RealPoint, "conjugate-fiber classification at real point " + q.str());
    if (!pair.curve().contains(q))
        fail(ErrorCode::PointNotOnCurve, "no fiber over removed point " + q.str());
    require_regular(pair);

    Rational sum = pair.D().at(q) + pair.D().at(q.conj());
    Rational ord(order_at_point(pair.h(), q));
    if (sum == ord) {
        Rational dq = pair.D().at(q);
        if (dq.denominator() == Integer(1)) return {ConjFiberType::Kind::PrincipalPair, 0};
        Integer den = dq.denominator();
        if (!den.fits_slong_p()) fail(ErrorCode::LimitExceeded, "multiplicity too large");
        return {ConjFiberType::Kind::ExceptionalPairMultM, den.get_si()};
    }
    return {ConjFiberType::Kind::TwoLinesPair, 0};
}

FiberReport fiber_report(const DpdPair& pair) {
    require_regular(pair);
    FiberReport report;

    // Special points: support of D plus zeros/poles of h, all on the curve.
    std::set<CurvePoint> specials;
    for (const auto& [p, c] : pair.D().terms()) specials.insert(p);
    for (const auto& [p, c] : pair.div_h().terms()) specials.insert(p);

    // Breakpoints on the real circle: real specials and real punctures.
    std::set<CurvePoint> marks;
    for (const CurvePoint& p : specials)
        if (p.is_real()) marks.insert(p);
    for (const CurvePoint& p : pair.curve().removed())
        if (p.is_real()) marks.insert(p);

    for (const CurvePoint& p : marks) {
        Breakpoint b{p, false, std::nullopt};
        b.is_puncture = !pair.curve().contains(p);
        if (!b.is_puncture) {
            b.fiber = classify_real_fiber(pair, p);
            if (p.is_infinity()) report.used_infinity_chart = true;
        }
        report.breakpoints.push_back(b);
    }

    // Sample points: one inside each cyclic gap between consecutive marks.
    auto sign_at = [&](const Rational& s) {
        GaussianRational v = pair.h().evaluate(GaussianRational(s));
        int sg = v.re().sign();
        if (sg == 0) fail(ErrorCode::Internal, "sample point hit a zero of h");
        return sg > 0 ? RealFiberType::TorsorRealCircle : RealFiberType::TorsorEmptyReal;
    };

    std::vector<Rational> finite;
    for (const Breakpoint& b : report.breakpoints)
        if (!b.point.is_infinity()) finite.push_back(b.point.value().re());

    size_t n = report.breakpoints.size();
    if (n == 0) {
        // no marks at all: the whole real circle is one arc
        report.arcs.push_back({Rational(0), sign_at(Rational(0))});
    }
    for (size_t i = 0; i < n; ++i) {
        const Breakpoint& from = report.breakpoints[i];
        bool wrap = (i + 1 == n); // arc closing the circle back to breakpoints[0]
        const Breakpoint& to = report.breakpoints[wrap ? 0 : i + 1];
        Rational sample;
        if (finite.empty()) {
            sample = Rational(0); // lone mark at infinity: arc is the real line
        } else if (from.point.is_infinity()) {
            sample = finite.front() - Rational(1);
        } else if (wrap || to.point.is_infinity()) {
            // beyond the largest finite mark (running through infinity when
            // infinity is unmarked)
            sample = finite.back() + Rational(1);
        } else {
            sample = (from.point.value().re() + to.point.value().re()) / Rational(2);
        }
        report.arcs.push_back({sample, sign_at(sample)});
    }

    // Non-real special conjugate pairs, positive-imaginary representative.
    for (const CurvePoint& p : specials) {
        if (p.is_real()) continue;
        if (p.value().im().sign() < 0) continue;
        report.conjugate_pairs.push_back({p, classify_conjugate_fiber(pair, p)});
    }
    return report;
}

} // namespace dpd
