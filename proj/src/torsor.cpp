#include "dpd/torsor.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "dpd/errors.hpp"

namespace dpd {

namespace {

long integral_value(const Rational& r) {
    if (r.denominator() != Integer(1))
        fail(ErrorCode::Internal, "expected an integer, got " + r.str());
    if (!r.numerator().fits_slong_p())
        fail(ErrorCode::LimitExceeded, "integer out of machine range");
    return r.numerator().get_si();
}

// Reporting order for obstruction points: 0 first, then positive reals
// ascending, then negative reals ascending, infinity last.
int walk_rank(const CurvePoint& p) {
    if (p.is_infinity()) return 3;
    int s = p.value().re().sign();
    if (s == 0) return 0;
    return s > 0 ? 1 : 2;
}

bool walk_before(const CurvePoint& a, const CurvePoint& b) {
    int ra = walk_rank(a), rb = walk_rank(b);
    if (ra != rb) return ra < rb;
    if (a.is_infinity()) return false;
    return a.value().re() < b.value().re();
}

// Scaling by a fourth root of unity u keeps u * tau*u = 1, so witnesses are
// only determined up to such units.  Canonical pick: rotate the lowest-degree
// numerator coefficient into {re > 0, im >= 0} (unique on each orbit).
RationalFunction unit_normalize(const RationalFunction& f) {
    if (f.is_zero()) return f;
    const Polynomial& num = f.numerator();
    GaussianRational c;
    for (int k = 0; k <= num.degree(); ++k)
        if (!num.coeff(k).is_zero()) {
            c = num.coeff(k);
            break;
        }
    GaussianRational u(1);
    for (int j = 0; j < 4; ++j) {
        GaussianRational rc = u * c;
        if (rc.re().sign() > 0 && rc.im().sign() >= 0) break;
        u = u * GaussianRational::i();
    }
    return RationalFunction(u) * f;
}

} // namespace

std::string obstruction_str(const NormObstruction& o) {
    if (o.kind == NormObstruction::Kind::NegativeSign) return "NegativeSign";
    return "OddOrderAt(" + o.point->str() + ")";
}

NormResult norm_equation(const RationalFunction& h, const RealCurve& curve) {
    if (h.is_zero()) fail(ErrorCode::ZeroFunction, "norm equation needs a nonzero function");
    if (!h.is_real()) fail(ErrorCode::NotReal, "norm equation needs a real function");
    (void)curve; // solvability is curve-independent: norms have even order and
                 // constant sign on the whole real circle, punctures included

    std::map<CurvePoint, int> orders;
    for (const auto& [r, m] : poly_gaussian_roots(h.numerator()))
        orders[CurvePoint(r)] += m;
    for (const auto& [r, m] : poly_gaussian_roots(h.denominator()))
        orders[CurvePoint(r)] -= m;
    int at_inf = h.order_at_infinity();
    if (at_inf != 0) orders[CurvePoint::infinity()] += at_inf;

    std::vector<CurvePoint> odd;
    for (const auto& [p, m] : orders)
        if (p.is_real() && m % 2 != 0) odd.push_back(p);
    if (!odd.empty()) {
        CurvePoint first = *std::min_element(odd.begin(), odd.end(), walk_before);
        return {std::nullopt, NormObstruction{NormObstruction::Kind::OddOrderAt, first}};
    }

    // With even real orders the sign of h on the real circle is the constant
    // sign of its leading coefficient (the denominator is monic).
    Rational lambda = h.numerator().leading().re();
    if (lambda.sign() < 0)
        return {std::nullopt, NormObstruction{NormObstruction::Kind::NegativeSign, {}}};

    RationalFunction g(Rational(1));
    for (const auto& [p, m] : orders) {
        if (p.is_infinity() || m == 0) continue;
        if (p.is_real()) {
            g = g * pow(RationalFunction(Polynomial::z() - Polynomial(p.value())), m / 2);
        } else if (p.value().im().sign() > 0) {
            auto it = orders.find(p.conj());
            if (it == orders.end() || it->second != m)
                fail(ErrorCode::Internal, "conjugate root multiplicities disagree");
            g = g * pow(RationalFunction(Polynomial::z() - Polynomial(p.value())), m);
        }
    }
    g = unit_normalize(g);
    if (h != RationalFunction(lambda) * g * g.conj())
        fail(ErrorCode::Internal, "norm witness failed verification");
    return {NormWitness{g, lambda}, std::nullopt};
}

PointTorsor torsor_over_point(const Rational& c) {
    if (c.sign() == 0) fail(ErrorCode::ZeroScalar, "torsor scalar must be nonzero");
    return c.sign() > 0 ? PointTorsor::CircleTorsor : PointTorsor::HatCircleTorsor;
}

TorsorPair::TorsorPair(RealCurve curve, QDivisor E, RationalFunction h)
    : curve_(std::move(curve)), E_(std::move(E)), h_(std::move(h)) {
    if (h_.is_zero())
        fail(ErrorCode::ZeroFunction, "torsor function must be nonzero");
    if (!h_.is_real()) fail(ErrorCode::NotReal, "torsor function must be real");
    if (!E_.is_integral())
        fail(ErrorCode::TorsorConstraintViolation, "divisor E must be integral");
    for (const auto& [p, c] : E_.terms())
        if (!curve_.contains(p))
            fail(ErrorCode::TorsorConstraintViolation,
                 "divisor E has support off the curve at " + p.str());
    QDivisor residue = E_ + E_.pullback_tau() + principal_divisor(h_, curve_);
    if (!residue.is_zero()) {
        CurvePoint p = residue.terms().begin()->first;
        fail(ErrorCode::TorsorConstraintViolation,
             "E + tau*E = -div(h) fails at " + p.str());
    }
}

TorsorPair torsor_pair_validate(const RealCurve& curve, const QDivisor& E,
                                const RationalFunction& h) {
    return TorsorPair(curve, E, h);
}

RationalFunction function_with_divisor(const QDivisor& target, const RealCurve& curve) {
    if (!target.is_integral())
        fail(ErrorCode::Internal, "divisor realization needs an integral divisor");
    RationalFunction f(Rational(1));
    Rational finite_sum(0);
    for (const auto& [p, c] : target.terms()) {
        if (!curve.contains(p))
            fail(ErrorCode::Internal, "divisor realization needs support on the curve");
        if (p.is_infinity()) continue;
        long e = integral_value(c);
        f = f * pow(RationalFunction(Polynomial::z() - Polynomial(p.value())), e);
        finite_sum = finite_sum + c;
    }
    if (curve.contains(CurvePoint::infinity())) {
        // fix the order at infinity by spending the surplus at a removed point;
        // prefer a real one (or a conjugate pair for even surplus) so that
        // tau-stable targets are realized by real functions
        Rational deficit = target.at(CurvePoint::infinity()) + finite_sum;
        if (deficit.sign() != 0) {
            long d = integral_value(deficit);
            std::optional<CurvePoint> s0;
            for (const CurvePoint& s : curve.removed())
                if (!s.is_infinity() && s.is_real() && !s0) s0 = s;
            if (s0) {
                f = f * pow(RationalFunction(Polynomial::z() - Polynomial(s0->value())),
                            -d);
            } else {
                s0 = curve.smallest_finite_removed();
                if (!s0)
                    fail(ErrorCode::Internal, "no removed point available for correction");
                Polynomial lin = Polynomial::z() - Polynomial(s0->value());
                if (d % 2 == 0)
                    f = f * pow(RationalFunction(lin * lin.conj()), -d / 2);
                else
                    f = f * pow(RationalFunction(lin), -d);
            }
        }
    }
    f = unit_normalize(f);
    if (principal_divisor(f, curve) != target)
        fail(ErrorCode::Internal, "divisor realization failed verification");
    return f;
}

TorsorIsoResult torsor_iso(const TorsorPair& t1, const TorsorPair& t2) {
    if (t1.curve() != t2.curve())
        fail(ErrorCode::CurveMismatch, "torsor pairs live on different curves");
    RationalFunction f0 = function_with_divisor(t2.E() - t1.E(), t1.curve());
    RationalFunction q = t2.h() / (t1.h() * f0 * f0.conj());
    NormResult r = norm_equation(q, t1.curve());
    if (!r.trivial()) return {std::nullopt, r.obstruction};
    TorsorIso iso{f0, *r.witness};
    RationalFunction f = iso.combined();
    if (t2.h() != RationalFunction(iso.residual.lambda) * f * f.conj() * t1.h())
        fail(ErrorCode::Internal, "isomorphism certificate failed verification");
    return {iso, std::nullopt};
}

} // namespace dpd
