#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "dpd/fibers.hpp"
#include "dpd/printer.hpp"
#include "dpd/topology.hpp"
#include "test_util.hpp"

using namespace dpd;
using namespace dpd_test;

extern unsigned long dpd_test_seed;

namespace {

// Probe points for fiber comparisons: every support point of the divisor and
// of div(h) that lies on the curve, split into real points and conjugate
// representatives.
void collect_probes(const DpdPair& p, std::set<CurvePoint>& real_pts,
                    std::set<CurvePoint>& conj_pts) {
    auto visit = [&](const CurvePoint& c) {
        if (!p.curve().contains(c)) return;
        if (c.is_real())
            real_pts.insert(c);
        else
            conj_pts.insert(c);
    };
    for (const auto& [c, coeff] : p.D().terms()) visit(c);
    for (const auto& [c, coeff] : p.div_h().terms()) visit(c);
}

} // namespace

TEST_CASE("twists preserve validity, regularity, fibers, and topology") {
    std::mt19937 rng(static_cast<unsigned>(dpd_test_seed) ^ 0x7f4a7c15u);
    const std::vector<DpdPair> bases = base_pairs();
    std::uniform_int_distribution<size_t> pick(0, bases.size() - 1);
    std::uniform_int_distribution<int> depth(0, 2);
    const Rational grid[] = {Rational(-3), Rational(-1), Rational(-1, 2), Rational(0),
                             Rational(1, 2), Rational(1), Rational(3)};

    int pairs_checked = 0;
    int failures = 0;
    for (int iter = 0; iter < 520; ++iter) {
        DpdPair p = bases[pick(rng)];
        for (int k = depth(rng); k > 0; --k) p = dpd_twist(p, random_twist(rng));
        TwistData t = random_twist(rng);
        DpdPair q = dpd_twist(p, t);
        ++pairs_checked;

        bool ok = true;
        // the twisted pair revalidates from scratch
        ok &= !code_of([&] { dpd_validate(q.curve(), q.D(), q.h()); }).has_value();
        ok &= dpd_is_regular(p).regular == dpd_is_regular(q).regular;
        ok &= classify_real_locus(p) == classify_real_locus(q);
        // the twist itself is a verifiable equivalence certificate
        ok &= verify_equivalence(p, q, Mobius::identity(), t.f, t.lambda);

        std::set<CurvePoint> real_pts, conj_pts;
        collect_probes(p, real_pts, conj_pts);
        collect_probes(q, real_pts, conj_pts);
        for (const Rational& r : grid)
            if (p.curve().contains(ptr(r))) real_pts.insert(ptr(r));
        if (p.curve().contains(CurvePoint::infinity()))
            real_pts.insert(CurvePoint::infinity());
        for (const CurvePoint& c : real_pts)
            ok &= classify_real_fiber(p, c) == classify_real_fiber(q, c);
        for (const CurvePoint& c : conj_pts)
            ok &= classify_conjugate_fiber(p, c) == classify_conjugate_fiber(q, c);

        if (!ok) {
            ++failures;
            MESSAGE("counterexample at iteration ", iter, ":\n",
                    print_pair_document(p), "twist f = ", t.f.str(),
                    ", lambda = ", t.lambda.str(), "\n", print_pair_document(q));
        }
    }
    CHECK(pairs_checked >= 500);
    CHECK(failures == 0);
}

TEST_CASE("validation agrees with the defining inequality on random data") {
    std::mt19937 rng(static_cast<unsigned>(dpd_test_seed) ^ 0x51a7e5u);
    const RealCurve curves[] = {RealCurve::affine_line(), RealCurve::circle()};
    const CurvePoint support_points[] = {pt(0), pt(1), pt(-1), pt(2), pt(-2),
                                         pt(0, 2), pt(0, -2), pt(1, 1), pt(1, -1)};
    const Rational coeffs[] = {Rational(-1), Rational(-1, 2), Rational(-1, 3),
                               Rational(1, 3), Rational(1, 2), Rational(1),
                               Rational(3, 2)};
    const Polynomial factors[] = {Z(), Z() - Polynomial(1), Z() + Polynomial(1),
                                  Z() - Polynomial(2), Z() * Z() + Polynomial(4)};
    const Rational consts[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 3)};

    std::uniform_int_distribution<int> nterms(0, 3), pick_pt(0, 8), pick_coeff(0, 6),
        nfactors(0, 3), pick_factor(0, 4), exp_d(-2, 2), pick_const(0, 3), pick_curve(0, 1);

    int accepted = 0, rejected = 0, disagreements = 0;
    for (int iter = 0; iter < 600; ++iter) {
        const RealCurve& C = curves[pick_curve(rng)];
        QDivisor D;
        for (int k = nterms(rng); k > 0; --k) {
            CurvePoint c = support_points[pick_pt(rng)];
            if (C.contains(c)) D.add_term(c, coeffs[pick_coeff(rng)]);
        }
        RationalFunction h{GaussianRational(consts[pick_const(rng)])};
        for (int k = nfactors(rng); k > 0; --k) {
            int e = exp_d(rng);
            RationalFunction base{factors[pick_factor(rng)]};
            for (int j = 0; j < std::abs(e); ++j) h = h * (e > 0 ? base : base.inverse());
        }

        // The validity inequality, computed directly from the definition.
        QDivisor divh = principal_divisor(h, C);
        std::set<CurvePoint> where;
        for (const auto& [c, coeff] : D.terms()) {
            where.insert(c);
            if (C.contains(c.conj())) where.insert(c.conj());
        }
        for (const auto& [c, coeff] : divh.terms()) where.insert(c);
        bool manual = true;
        for (const CurvePoint& c : where)
            manual &= D.at(c) + D.at(c.conj()) <= divh.at(c);

        auto code = code_of([&] { dpd_validate(C, D, h); });
        bool validator = !code.has_value();
        if (validator != manual || (code && *code != ErrorCode::ValidityViolation)) {
            ++disagreements;
            MESSAGE("disagreement: manual=", manual, " validator=", validator, " on\nD: ",
                    D.str(), "\nh: ", h.str());
        }
        (validator ? accepted : rejected) += 1;
    }
    CHECK(disagreements == 0);
    // both branches must actually be exercised
    CHECK(accepted > 50);
    CHECK(rejected > 50);
}
