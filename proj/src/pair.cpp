#include "dpd/pair.hpp"

#include <algorithm>
#include <set>

#include "dpd/errors.hpp"

namespace dpd {

namespace {

long to_long(const Integer& n) {
    if (!n.fits_slong_p()) fail(ErrorCode::LimitExceeded, "integer out of machine range");
    return n.get_si();
}

long integral_value(const Rational& r) {
    if (r.denominator() != Integer(1))
        fail(ErrorCode::Internal, "expected an integer, got " + r.str());
    return to_long(r.numerator());
}

RationalFunction linear_z_minus(const GaussianRational& c) {
    return RationalFunction(Polynomial::z() - Polynomial(c));
}

void check_conjugation_stable(const std::vector<CurvePoint>& points) {
    for (const CurvePoint& p : points) {
        if (std::find(points.begin(), points.end(), p.conj()) == points.end())
            fail(ErrorCode::NotConjugationStable,
                 "point set is not conjugation-stable: missing conjugate of " + p.str());
    }
}

} // namespace

TwistData::TwistData(RationalFunction f_, Rational lambda_)
    : f(std::move(f_)), lambda(std::move(lambda_)) {
    if (f.is_zero()) fail(ErrorCode::InvalidTwist, "twist function must be nonzero");
    if (lambda.sign() <= 0)
        fail(ErrorCode::InvalidTwist, "twist scalar must be positive, got " + lambda.str());
}

DpdPair::DpdPair(RealCurve curve, QDivisor D, RationalFunction h)
    : curve_(std::move(curve)), D_(std::move(D)), h_(std::move(h)) {
    if (h_.is_zero()) fail(ErrorCode::ZeroFunction, "h must be a nonzero rational function");
    if (!h_.is_real()) fail(ErrorCode::NotReal, "h must have real coefficients: " + h_.str());
    for (const auto& [p, c] : D_.terms()) {
        if (!curve_.contains(p))
            fail(ErrorCode::SemanticError, "support point removed from curve: " + p.str());
    }
    div_h_ = principal_divisor(h_, curve_);
    QDivisor total = D_ + D_.pullback_tau();
    if (!divisor_leq(total, div_h_)) {
        std::set<CurvePoint> points;
        for (const auto& [p, c] : total.terms()) points.insert(p);
        for (const auto& [p, c] : div_h_.terms()) points.insert(p);
        for (const CurvePoint& p : points) {
            if (total.at(p) > div_h_.at(p))
                fail(ErrorCode::ValidityViolation,
                     "validity fails at " + p.str() + ": D(p) + D(conj p) = " +
                         total.at(p).str() + " > ord(h) = " + div_h_.at(p).str());
        }
    }
}

DpdPair dpd_validate(const RealCurve& curve, const QDivisor& D, const RationalFunction& h) {
    return DpdPair(curve, D, h);
}

QDivisor dpd_d_minus(const DpdPair& pair) {
    return pair.D().pullback_tau() - pair.div_h();
}

bool regular_pair(const Rational& r1, const Rational& r2) {
    Integer cross = r1.numerator() * r2.denominator() - r2.numerator() * r1.denominator();
    return abs(cross) == Integer(1);
}

RegularityResult dpd_is_regular(const DpdPair& pair) {
    QDivisor total = pair.D() + pair.D().pullback_tau();
    std::set<CurvePoint> points;
    for (const auto& [p, c] : total.terms()) points.insert(p);
    for (const auto& [p, c] : pair.div_h().terms()) points.insert(p);
    for (const CurvePoint& p : points) {
        Rational sum = total.at(p);
        Rational ord = pair.div_h().at(p);
        if (sum == ord) continue; // equality points impose no condition
        Rational r1 = pair.D().at(p);
        Rational r2 = pair.D().at(p.conj()) - ord;
        // The invariant form of the test pairs D(p) against ord_p(h) - D(conj p);
        // it agrees with the definition on reduced pairs and is preserved by
        // equivalence twists.
        if (!regular_pair(r1, -r2)) {
            RegularityResult res;
            res.regular = false;
            res.witness = p;
            res.r1 = r1;
            res.r2 = r2;
            return res;
        }
    }
    return {};
}

DpdPair dpd_twist(const DpdPair& pair, const TwistData& t) {
    QDivisor new_d = pair.D() + principal_divisor(t.f, pair.curve());
    RationalFunction new_h =
        RationalFunction(t.lambda) * t.f * t.f.conj() * pair.h();
    return DpdPair(pair.curve(), new_d, new_h);
}

LocalReduction dpd_local_reduce(const DpdPair& pair, const CurvePoint& c) {
    if (!c.is_real()) fail(ErrorCode::RealPointRequired, "local reduction needs a real point");
    if (c.is_infinity())
        fail(ErrorCode::InfinityUnsupported,
             "local reduction at infinity: reparametrize first");
    if (!pair.curve().contains(c))
        fail(ErrorCode::PointNotOnCurve, "local reduction at removed point " + c.str());
    long delta = to_long(pair.D().at(c).floor());
    RationalFunction f = pow(linear_z_minus(c.value()), -delta);
    if (pair.curve().contains(CurvePoint::infinity())) {
        // Compensate at a removed finite point so the twist divisor restricted
        // to the curve is exactly -delta*[c]; otherwise D(infinity) would pick
        // up the degree of f.
        std::optional<CurvePoint> s0 = pair.curve().smallest_finite_removed();
        if (!s0)
            fail(ErrorCode::Internal, "curve with no removed point");
        f = f * pow(linear_z_minus(s0->value()), delta);
    }
    TwistData t(f, Rational(1));
    return {dpd_twist(pair, t), t};
}

DpdPair dpd_restrict(const DpdPair& pair, const std::vector<CurvePoint>& points) {
    if (points.empty()) return pair;
    check_conjugation_stable(points);
    std::vector<CurvePoint> removed = pair.curve().removed();
    for (const CurvePoint& p : points) {
        if (p.is_real())
            fail(ErrorCode::RealPointRemoval,
                 "removing real point " + p.str() + " would change the real locus");
        if (!pair.curve().contains(p))
            fail(ErrorCode::PointNotOnCurve, "cannot remove " + p.str() + ": not on curve");
        removed.push_back(p);
    }
    RealCurve smaller(removed);
    return DpdPair(smaller, pair.D().restrict_to(smaller), pair.h());
}

namespace {

DpdPair extend_impl(const DpdPair& pair, const std::vector<CurvePoint>& points,
                    bool allow_negative_real) {
    if (points.empty()) return pair;
    check_conjugation_stable(points);
    std::vector<CurvePoint> removed;
    for (const CurvePoint& p : pair.curve().removed()) {
        if (std::find(points.begin(), points.end(), p) == points.end())
            removed.push_back(p);
    }
    if (removed.size() + points.size() != pair.curve().removed().size())
        fail(ErrorCode::SemanticError, "extension points must lie in the removed set");
    for (const CurvePoint& p : points) {
        int ord = order_at_point(pair.h(), p);
        if (ord != 0)
            fail(ErrorCode::ExtensionObstruction,
                 "h has order " + std::to_string(ord) + " at " + p.str());
        if (p.is_real()) {
            if (!allow_negative_real)
                fail(ErrorCode::RealPoint,
                     "extension point must be non-real: " + p.str());
            GaussianRational v = p.is_infinity() ? pair.h().value_at_infinity()
                                                 : pair.h().evaluate(p.value());
            if (v.re().sign() >= 0)
                fail(ErrorCode::ExtensionObstruction,
                     "h is positive at real extension point " + p.str() +
                         ": the real locus would grow");
        }
    }
    return DpdPair(RealCurve(removed), pair.D(), pair.h());
}

} // namespace

DpdPair dpd_extend(const DpdPair& pair, const std::vector<CurvePoint>& points) {
    return extend_impl(pair, points, false);
}

DpdPair dpd_extend_allow_negative_real(const DpdPair& pair,
                                       const std::vector<CurvePoint>& points) {
    return extend_impl(pair, points, true);
}

RationalFunction section_generator(const DpdPair& pair, long n) {
    QDivisor E;
    if (n >= 0)
        E = (Rational(n) * pair.D()).floor();
    else
        E = (Rational(-n) * dpd_d_minus(pair)).floor();

    RationalFunction g(GaussianRational(1));
    for (const auto& [p, coeff] : E.terms()) {
        if (p.is_infinity()) continue;
        g = g * pow(linear_z_minus(p.value()), -integral_value(coeff));
    }
    if (pair.curve().contains(CurvePoint::infinity())) {
        long k = integral_value(E.degree());
        auto s0 = pair.curve().smallest_finite_removed();
        if (!s0)
            fail(ErrorCode::Internal, "affine curve containing infinity has no finite puncture");
        g = g * pow(linear_z_minus(s0->value()), k);
    }
    return g;
}

bool in_graded_piece(const DpdPair& pair, long n, const RationalFunction& f) {
    if (f.is_zero()) return true;
    return regular_on_curve(f / section_generator(pair, n), pair.curve());
}

RationalFunction sigma_on_section(const DpdPair& pair, long n, const RationalFunction& f) {
    if (!in_graded_piece(pair, n, f))
        fail(ErrorCode::NotInPiece,
             "function is not in the degree-" + std::to_string(n) + " piece: " + f.str());
    RationalFunction out = pow(pair.h(), n) * f.conj();
    if (!in_graded_piece(pair, -n, out))
        fail(ErrorCode::Internal, "involution image left its graded piece");
    return out;
}

PresentationReport verify_presentation(const DpdPair& pair,
                                       const std::vector<Generator>& generators,
                                       const std::vector<Relation>& relations) {
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].f.is_zero() ||
            !in_graded_piece(pair, generators[i].degree, generators[i].f))
            fail(ErrorCode::NotInPiece,
                 "generator " + std::to_string(i + 1) + " is not in its degree-" +
                     std::to_string(generators[i].degree) + " piece");
    }
    PresentationReport report;
    for (size_t r = 0; r < relations.size(); ++r) {
        const Relation& rel = relations[r];
        if (rel.exponents.size() != generators.size())
            fail(ErrorCode::SemanticError,
                 "relation " + std::to_string(r + 1) + " has " +
                     std::to_string(rel.exponents.size()) + " exponents for " +
                     std::to_string(generators.size()) + " generators");
        long total_degree = 0;
        RationalFunction lhs(GaussianRational(1));
        for (size_t i = 0; i < rel.exponents.size(); ++i) {
            if (rel.exponents[i] < 0)
                fail(ErrorCode::SemanticError, "relation exponents must be nonnegative");
            total_degree += rel.exponents[i] * generators[i].degree;
            lhs = lhs * pow(generators[i].f, rel.exponents[i]);
        }
        if (total_degree != 0) {
            report.ok = false;
            report.failed_relation = static_cast<int>(r);
            report.detail = "monomial has graded degree " + std::to_string(total_degree) +
                            ", expected 0";
            return report;
        }
        if (lhs != rel.rhs) {
            report.ok = false;
            report.failed_relation = static_cast<int>(r);
            report.detail = "identity fails: lhs = " + lhs.str() + ", rhs = " + rel.rhs.str();
            return report;
        }
    }
    return report;
}

} // namespace dpd
