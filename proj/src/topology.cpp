#include "dpd/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dpd/errors.hpp"
#include "dpd/polynomial.hpp"

namespace dpd {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

long to_long(const Rational& r) {
    if (r.denominator() != 1)
        fail(ErrorCode::Internal, "expected an integer, got " + r.str());
    Integer n = r.numerator();
    if (!n.fits_slong_p())
        fail(ErrorCode::LimitExceeded, "coefficient " + r.str() + " out of range");
    return n.get_si();
}

CurvePoint point_i() { return CurvePoint(GaussianRational::i()); }
CurvePoint point_minus_i() { return CurvePoint(-GaussianRational::i()); }
CurvePoint real_point(int x) { return CurvePoint(GaussianRational(x)); }

RationalFunction rf_one() { return RationalFunction(GaussianRational(1)); }

RationalFunction linear_z_minus(const GaussianRational& c) {
    return RationalFunction(Polynomial::z() - Polynomial(c));
}

// Orders of h at every point of P^1, removed points and infinity included.
std::map<CurvePoint, int> function_orders(const RationalFunction& h) {
    std::map<CurvePoint, int> orders;
    for (const auto& [root, mult] : poly_gaussian_roots(h.numerator()))
        orders[CurvePoint(root)] += mult;
    for (const auto& [root, mult] : poly_gaussian_roots(h.denominator()))
        orders[CurvePoint(root)] -= mult;
    int at_inf = h.order_at_infinity();
    if (at_inf != 0) orders[CurvePoint::infinity()] += at_inf;
    for (auto it = orders.begin(); it != orders.end();)
        it = it->second == 0 ? orders.erase(it) : std::next(it);
    return orders;
}

int order_of(const std::map<CurvePoint, int>& orders, const CurvePoint& p) {
    auto it = orders.find(p);
    return it == orders.end() ? 0 : it->second;
}

// The real removed point that survives as (or is sent to) the removed point
// of the canonical interval curve P^1 \ {inf}.
CurvePoint interval_anchor(const RealCurve& curve) {
    if (!curve.contains(CurvePoint::infinity())) return CurvePoint::infinity();
    for (const CurvePoint& s : curve.removed())
        if (s.is_real()) return s;
    fail(ErrorCode::Internal, "interval-type curve without a real removed point");
}

RealImage real_image_from(const FiberReport& rep) {
    const size_t n = rep.breakpoints.size();
    auto positive = [&](size_t idx) {
        return rep.arcs[idx].generic == RealFiberType::TorsorRealCircle;
    };
    if (n == 0)
        return {positive(0) ? RealImage::Kind::FullCircle : RealImage::Kind::Empty, {}};

    bool any_positive = false, all_positive = true, any_puncture = false;
    for (size_t i = 0; i < n; ++i) {
        any_positive = any_positive || positive(i);
        all_positive = all_positive && positive(i);
        any_puncture = any_puncture || rep.breakpoints[i].is_puncture;
    }
    if (!any_positive) return {RealImage::Kind::Empty, {}};
    if (all_positive && !any_puncture) return {RealImage::Kind::FullCircle, {}};

    std::vector<ImageSegment> segments;
    for (size_t i = 0; i < n; ++i) {
        if (!positive(i)) continue;
        // A run of positive arcs starts at arc i when it cannot be entered
        // from the previous arc: the mark before arc i is a puncture, or the
        // previous arc is empty.
        size_t prev = (i + n - 1) % n;
        if (!rep.breakpoints[i].is_puncture && positive(prev)) continue;
        size_t j = i;
        while (true) {
            size_t next = (j + 1) % n;
            if (rep.breakpoints[next].is_puncture || !positive(next)) break;
            j = next;
        }
        const Breakpoint& from = rep.breakpoints[i];
        const Breakpoint& to = rep.breakpoints[(j + 1) % n];
        segments.push_back(ImageSegment{{from.point, !from.is_puncture, from.fiber},
                                        {to.point, !to.is_puncture, to.fiber}});
    }
    return {RealImage::Kind::Segments, segments};
}

}  // namespace

std::string model_name(ModelType m) {
    switch (m) {
        case ModelType::Torus: return "Torus";
        case ModelType::Sphere: return "Sphere";
        case ModelType::RP2: return "RP2";
        case ModelType::KleinBottle: return "KleinBottle";
    }
    fail(ErrorCode::Internal, "unknown model");
}

DpdPair canonical_pair(ModelType m) {
    Polynomial z = Polynomial::z();
    RationalFunction one_minus_z2(Polynomial(1) - z * z);
    QDivisor D;
    switch (m) {
        case ModelType::Torus:
            return DpdPair(RealCurve({point_i(), point_minus_i()}), D, rf_one());
        case ModelType::Sphere:
            return DpdPair(RealCurve({CurvePoint::infinity()}), D, one_minus_z2);
        case ModelType::RP2:
            D.add_term(real_point(-1), Rational(1, 2));
            return DpdPair(RealCurve({CurvePoint::infinity()}), D, one_minus_z2);
        case ModelType::KleinBottle:
            D.add_term(real_point(-1), Rational(1, 2));
            D.add_term(real_point(1), Rational(1, 2));
            return DpdPair(RealCurve({CurvePoint::infinity()}), D, one_minus_z2);
    }
    fail(ErrorCode::Internal, "unknown model");
}

TopologyVerdict TopologyVerdict::model_verdict(ModelType m) {
    return {Kind::Model, m, ""};
}
TopologyVerdict TopologyVerdict::empty_locus() { return {Kind::EmptyRealLocus, {}, ""}; }
TopologyVerdict TopologyVerdict::non_compact(std::string why) {
    return {Kind::NonCompactOrNotConnected, {}, std::move(why)};
}
TopologyVerdict TopologyVerdict::undetermined(std::string why) {
    return {Kind::Undetermined, {}, std::move(why)};
}

std::string TopologyVerdict::str() const {
    switch (kind) {
        case Kind::Model: return model_name(*model);
        case Kind::EmptyRealLocus: return "EmptyRealLocus";
        case Kind::NonCompactOrNotConnected:
            return "NonCompactOrNotConnected(" + reason + ")";
        case Kind::Undetermined: return "Undetermined(" + reason + ")";
    }
    fail(ErrorCode::Internal, "unknown verdict");
}

std::string ImageSegment::str() const {
    std::string out = from.closed ? "[" : "(";
    out += from.point.str() + ", " + to.point.str();
    out += to.closed ? "]" : ")";
    return out;
}

std::string RealImage::str() const {
    switch (kind) {
        case Kind::Empty: return "empty";
        case Kind::FullCircle: return "full circle";
        case Kind::Segments: break;
    }
    std::string out;
    for (const ImageSegment& s : segments) {
        if (!out.empty()) out += " u ";
        out += s.str();
    }
    return out;
}

RealImage real_image(const DpdPair& pair) { return real_image_from(fiber_report(pair)); }

TopologyVerdict classify_real_locus(const DpdPair& pair) {
    FiberReport rep = fiber_report(pair);
    RealImage img = real_image_from(rep);
    const bool interval = pair.curve().kind() == CurveKind::IntervalType;

    switch (img.kind) {
        case RealImage::Kind::Empty: return TopologyVerdict::empty_locus();
        case RealImage::Kind::FullCircle: {
            if (interval)
                fail(ErrorCode::Internal, "full-circle image over an interval-type base");
            for (const Breakpoint& b : rep.breakpoints)
                if (!b.fiber || *b.fiber != RealFiberType::TorsorRealCircle)
                    fail(ErrorCode::Internal, "full-circle image with a non-torsor fiber");
            return TopologyVerdict::model_verdict(ModelType::Torus);
        }
        case RealImage::Kind::Segments: break;
    }

    if (img.segments.size() > 1)
        return TopologyVerdict::non_compact(
            "image " + img.str() + " has " + std::to_string(img.segments.size()) +
            " connected components");
    const ImageSegment& seg = img.segments[0];
    if (!interval)
        return TopologyVerdict::undetermined(
            "image " + seg.str() +
            " is a proper arc of the circle-type base; outside the model table");
    for (const SegmentEnd* end : {&seg.from, &seg.to}) {
        if (end->closed) continue;
        if (end->point.is_infinity())
            return TopologyVerdict::non_compact("image " + seg.str() +
                                                " is unbounded toward the puncture at inf");
        return TopologyVerdict::non_compact("image " + seg.str() +
                                            " approaches the puncture at " +
                                            end->point.str());
    }
    char ca = fiber_type_letter(*seg.from.fiber);
    char cb = fiber_type_letter(*seg.to.fiber);
    if (ca == 'a' || cb == 'a')
        fail(ErrorCode::Internal, "image endpoint carries a torsor fiber");
    if (ca == 'c' && cb == 'c') return TopologyVerdict::model_verdict(ModelType::Sphere);
    if (ca == 'b' && cb == 'b')
        return TopologyVerdict::model_verdict(ModelType::KleinBottle);
    return TopologyVerdict::model_verdict(ModelType::RP2);
}

// ---- Moves -----------------------------------------------------------------

DpdPair apply_move(const DpdPair& pair, const Move& move) {
    return std::visit(
        overloaded{
            [&](const MoveTwist& m) { return dpd_twist(pair, m.twist); },
            [&](const MoveRestrictNonReal& m) { return dpd_restrict(pair, m.points); },
            [&](const MoveExtendNonReal& m) { return dpd_extend(pair, m.points); },
            [&](const MoveExtendNegativeReal& m) {
                return dpd_extend_allow_negative_real(pair, m.points);
            },
            [&](const MoveReparametrize& m) {
                return DpdPair(m.map.pullback(pair.curve()), m.map.pullback(pair.D()),
                               m.map.pullback(pair.h()));
            },
            [&](const MoveLocalReduce& m) { return dpd_local_reduce(pair, m.point).pair; },
            [&](const MoveFlipSign&) {
                Mobius flip = Mobius::flip();
                return DpdPair(flip.pullback(pair.curve()), flip.pullback(pair.D()),
                               flip.pullback(pair.h()));
            },
        },
        move);
}

DpdPair apply_moves(const DpdPair& pair, const std::vector<Move>& moves) {
    DpdPair cur = pair;
    for (const Move& m : moves) cur = apply_move(cur, m);
    return cur;
}

namespace {

std::string point_list(const std::vector<CurvePoint>& points) {
    std::string out;
    for (const CurvePoint& p : points) {
        if (!out.empty()) out += ", ";
        out += p.str();
    }
    return out;
}

}  // namespace

std::string move_str(const Move& move) {
    return std::visit(
        overloaded{
            [](const MoveTwist& m) {
                return "Twist(" + m.twist.f.str() + ", " + m.twist.lambda.str() + ")";
            },
            [](const MoveRestrictNonReal& m) {
                return "RestrictNonReal(" + point_list(m.points) + ")";
            },
            [](const MoveExtendNonReal& m) {
                return "ExtendNonReal(" + point_list(m.points) + ")";
            },
            [](const MoveExtendNegativeReal& m) {
                return "ExtendNegativeReal(" + point_list(m.points) + ")";
            },
            [](const MoveReparametrize& m) {
                return "Reparametrize(z -> " + m.map.str() + ")";
            },
            [](const MoveLocalReduce& m) { return "LocalReduce(" + m.point.str() + ")"; },
            [](const MoveFlipSign&) { return std::string("FlipSign"); },
        },
        move);
}

// ---- Normalization ---------------------------------------------------------

NormalizeResult normalize_to_model(const DpdPair& input) {
    TopologyVerdict verdict = classify_real_locus(input);
    if (!verdict.is_model())
        fail(ErrorCode::NotAModel,
             "real locus is not one of the four compact models: " + verdict.str());
    const ModelType model = *verdict.model;
    const bool interval = input.curve().kind() == CurveKind::IntervalType;

    std::vector<Move> moves;
    DpdPair cur = input;
    auto emit = [&](Move mv) {
        cur = apply_move(cur, mv);
        if (classify_real_locus(cur) != verdict)
            fail(ErrorCode::Internal,
                 "normalization move changed the verdict: " + move_str(mv));
        moves.push_back(std::move(mv));
    };

    // Step 1: a single twist clearing h at every non-real point (and D too at
    // principal conjugate pairs), plus the even orders of h at real punctures
    // destined for extension.  The exponents are arranged to have total
    // degree zero whenever infinity lies on the curve, so nothing leaks into
    // D(infinity).
    {
        std::map<CurvePoint, int> orders = function_orders(cur.h());
        std::map<CurvePoint, long> expo;

        std::set<CurvePoint> upper;  // positive-imaginary representatives
        for (const auto& [p, o] : orders)
            if (p.is_finite() && !p.is_real() && p.value().im().sign() > 0)
                upper.insert(p);
        for (const auto& [p, c] : cur.D().terms())
            if (!p.is_real())
                upper.insert(p.value().im().sign() > 0 ? p : p.conj());
        for (const CurvePoint& q : upper) {
            if (!interval && q == point_i() && !cur.curve().contains(q))
                continue;  // stays removed on the canonical circle curve
            CurvePoint tq = q.conj();
            Rational dq = cur.D().at(q), dtq = cur.D().at(tq);
            int m = order_of(orders, q);
            bool integral = dq.denominator() == 1 && dtq.denominator() == 1;
            if (integral && dq + dtq == Rational(m)) {
                // Principal conjugate fiber: one twist clears D and h alike.
                if (!dq.is_zero()) expo[q] -= to_long(dq);
                if (!dtq.is_zero()) expo[tq] -= to_long(dtq);
            } else if (m != 0) {
                // Clear h only; the divisor residue goes away by restriction.
                expo[q] -= m;
            }
        }

        CurvePoint anchor = CurvePoint::infinity();
        if (interval) {
            anchor = interval_anchor(cur.curve());
            for (const CurvePoint& s : cur.curve().removed()) {
                if (!s.is_real() || s == anchor || s.is_infinity()) continue;
                int o = order_of(orders, s);
                if (o == 0) continue;
                if (o % 2 != 0)
                    fail(ErrorCode::Internal,
                         "odd order of h at the real puncture " + s.str() +
                             " of a model pair");
                expo[s] -= o / 2;  // squared through conjugation: clears (z-s)^o
            }
        }

        if (cur.curve().contains(CurvePoint::infinity())) {
            long total = 0;
            for (const auto& [p, e] : expo) total += e;
            if (total != 0) {
                CurvePoint comp = interval ? anchor : point_i();
                expo[comp] -= total;
            }
        }

        RationalFunction f = rf_one();
        for (const auto& [p, e] : expo)
            if (e != 0) f = f * pow(linear_z_minus(p.value()), e);
        if (f != rf_one()) emit(MoveTwist{TwistData(f, Rational(1))});
    }

    // Step 2: restriction at the non-real support of D (conjugation-closed),
    // and at i, -i when a circle-type base does not already remove them.
    {
        std::set<CurvePoint> rset;
        for (const auto& [p, c] : cur.D().terms())
            if (!p.is_real()) {
                rset.insert(p);
                rset.insert(p.conj());
            }
        if (!interval)
            for (const CurvePoint& p : {point_i(), point_minus_i()})
                if (cur.curve().contains(p)) rset.insert(p);
        if (!rset.empty())
            emit(MoveRestrictNonReal{{rset.begin(), rset.end()}});
    }

    // Step 3: extensions down to the canonical removed set.
    {
        std::vector<CurvePoint> ext;
        for (const CurvePoint& s : cur.curve().removed())
            if (!s.is_real() && (interval || (s != point_i() && s != point_minus_i())))
                ext.push_back(s);
        if (!ext.empty()) emit(MoveExtendNonReal{ext});
    }
    if (interval) {
        CurvePoint anchor = interval_anchor(cur.curve());
        std::vector<CurvePoint> ext;
        for (const CurvePoint& s : cur.curve().removed())
            if (s.is_real() && s != anchor) ext.push_back(s);
        if (!ext.empty()) emit(MoveExtendNegativeReal{ext});
    }

    // Step 4: reparametrize.  Interval base: send the image onto [-1,1] and
    // the surviving puncture to infinity.  Circle base: when infinity is
    // special, rotate it to a finite point first (rotations preserve the
    // curve).
    if (interval) {
        RealImage img = real_image(cur);
        if (img.kind != RealImage::Kind::Segments || img.segments.size() != 1)
            fail(ErrorCode::Internal, "model pair without a single-segment image");
        const ImageSegment& seg = img.segments[0];
        Mobius psi =
            Mobius::through(seg.from.point, seg.to.point, interval_anchor(cur.curve()));
        if (!psi.is_identity()) emit(MoveReparametrize{psi});
    } else if (!cur.D().at(CurvePoint::infinity()).is_zero()) {
        int k = 1;
        while (!cur.D().at(real_point(-k)).is_zero()) ++k;
        emit(MoveReparametrize{Mobius(Rational(k), Rational(1), Rational(-1), Rational(k))});
    }

    // Step 5: local reduction at every real special point with a nonzero
    // integer part.
    {
        std::vector<CurvePoint> todo;
        for (const auto& [p, c] : cur.D().terms())
            if (p.is_real() && c.floor() != 0) todo.push_back(p);
        for (const CurvePoint& p : todo) emit(MoveLocalReduce{p});
    }

    // Step 6: orient the divisor, heavier end at -1.
    if (interval && cur.D().at(real_point(-1)) < cur.D().at(real_point(1)))
        emit(MoveFlipSign{});

    // Step 7: the final scalar twist onto the canonical function.
    {
        RationalFunction target = canonical_pair(model).h();
        if (cur.h() != target) {
            RationalFunction ratio = cur.h() / target;
            if (!ratio.is_constant())
                fail(ErrorCode::Internal,
                     "normalization left a non-scalar function ratio " + ratio.str());
            GaussianRational value = ratio.evaluate(GaussianRational(0));
            if (!value.is_real() || value.re().sign() <= 0)
                fail(ErrorCode::Internal, "non-positive function ratio " + value.str());
            emit(MoveTwist{TwistData(rf_one(), value.re().inverse())});
        }
    }

    if (cur != canonical_pair(model))
        fail(ErrorCode::Internal, "normalization did not reach the canonical pair");
    return {model, std::move(moves), std::move(cur)};
}

// ---- Equivalence certificates ----------------------------------------------

bool verify_equivalence(const DpdPair& pair1, const DpdPair& pair2, const Mobius& psi,
                        const RationalFunction& f, const Rational& lambda) {
    if (f.is_zero()) fail(ErrorCode::ZeroFunction, "certificate function is zero");
    if (lambda.sign() <= 0)
        fail(ErrorCode::InvalidTwist, "certificate scale must be positive");

    std::vector<CurvePoint> mapped;
    for (const CurvePoint& s : pair1.curve().removed()) mapped.push_back(psi.apply(s));
    std::sort(mapped.begin(), mapped.end());
    std::vector<CurvePoint> target = pair2.curve().removed();
    std::sort(target.begin(), target.end());
    if (mapped != target)
        fail(ErrorCode::CurveMismatch,
             "reparametrization does not carry the removed set onto the target curve");

    QDivisor lhs = psi.pullback(pair2.D());
    QDivisor rhs = pair1.D() + principal_divisor(f, pair1.curve());
    if (!(lhs == rhs)) return false;

    RationalFunction hl = psi.pullback(pair2.h());
    RationalFunction hr =
        RationalFunction(GaussianRational(lambda)) * f * f.conj() * pair1.h();
    return hl == hr;
}

}  // namespace dpd
