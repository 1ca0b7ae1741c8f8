#include <random>
#include <variant>

#include "doctest.h"
#include "dpd/errors.hpp"
#include "dpd/topology.hpp"
#include "test_util.hpp"

using namespace dpd;
using namespace dpd_test;

extern unsigned long dpd_test_seed;

namespace {

DpdPair make_pair(std::vector<CurvePoint> removed,
                  std::vector<std::pair<CurvePoint, Rational>> dterms, RationalFunction h) {
    QDivisor D;
    for (auto& [p, c] : dterms) D.add_term(p, c);
    return DpdPair(RealCurve(std::move(removed)), D, std::move(h));
}

RationalFunction one_minus_z2() { return RationalFunction(Polynomial(1) - Z() * Z()); }

std::vector<ModelType> all_models() {
    return {ModelType::Torus, ModelType::Sphere, ModelType::RP2, ModelType::KleinBottle};
}

// Checks the full normalization contract for one input and returns the moves.
std::vector<Move> check_normalize(const DpdPair& input, ModelType want) {
    NormalizeResult r = normalize_to_model(input);
    REQUIRE(r.model == want);
    REQUIRE(r.canonical == canonical_pair(want));
    REQUIRE(apply_moves(input, r.moves) == r.canonical);
    return r.moves;
}

// A random move that keeps the pair valid; used for round-trip fuzzing.
Move random_move(std::mt19937& rng, const DpdPair& cur) {
    const bool interval = cur.curve().kind() == CurveKind::IntervalType;
    std::uniform_int_distribution<int> kind(0, 5), small(-2, 2), pos(1, 3);
    for (int attempt = 0; attempt < 8; ++attempt) {
        switch (kind(rng)) {
            case 0: return MoveTwist{random_twist(rng)};
            case 1: return MoveFlipSign{};
            case 2: {
                if (interval) {
                    static const Rational slopes[] = {Rational(1, 2), Rational(2),
                                                      Rational(3), Rational(1)};
                    return MoveReparametrize{Mobius::affine(
                        slopes[static_cast<unsigned>(pos(rng)) % 4], Rational(small(rng)))};
                }
                int k = pos(rng);  // a rotation of the circle base
                return MoveReparametrize{
                    Mobius(Rational(k), Rational(1), Rational(-1), Rational(k))};
            }
            case 3: {
                CurvePoint q = pt(small(rng), 2);
                if (cur.curve().contains(q))
                    return MoveRestrictNonReal{{q, q.conj()}};
                break;
            }
            case 4: {
                for (const CurvePoint& s : cur.curve().removed()) {
                    if (s.is_real() || s == pt(0, 1) || s == pt(0, -1)) continue;
                    if (s.value().im().sign() < 0) continue;
                    if (order_at_point(cur.h(), s) != 0) continue;
                    return MoveExtendNonReal{{s, s.conj()}};
                }
                break;
            }
            case 5: {
                for (const auto& [p, c] : cur.D().terms()) {
                    if (!p.is_real() || p.is_infinity()) continue;
                    if (c.floor() != 0) return MoveLocalReduce{p};
                }
                break;
            }
        }
    }
    return MoveTwist{random_twist(rng)};
}

}  // namespace

TEST_CASE("normalization: scaling a sphere") {
    DpdPair wide = make_pair({CurvePoint::infinity()}, {},
                             RationalFunction(Polynomial(4) - Z() * Z()));
    std::vector<Move> moves = check_normalize(wide, ModelType::Sphere);
    REQUIRE(moves.size() == 2);
    CHECK(move_str(moves[0]) == "Reparametrize(z -> 2*z)");
    CHECK(move_str(moves[1]) == "Twist(1, 1/4)");
}

TEST_CASE("normalization: canonical pairs are fixed points") {
    for (ModelType m : all_models()) {
        std::vector<Move> moves = check_normalize(canonical_pair(m), m);
        CHECK(moves.empty());
    }
}

TEST_CASE("normalization: conjugate zeros of h clear by one twist") {
    // Built from the canonical Klein pair by the inverse moves: twist by
    // (z+1) undoing the local reduction, then twist by (z-2i) introducing
    // the conjugate pair of zeros.
    DpdPair klein = canonical_pair(ModelType::KleinBottle);
    DpdPair fixture = dpd_twist(klein, TwistData(RationalFunction(Z() + Polynomial(1)), Rational(1)));
    fixture = dpd_twist(fixture,
                        TwistData(RationalFunction(Z() - Polynomial(GaussianRational(
                                      Rational(0), Rational(2)))),
                                  Rational(1)));
    CHECK(fixture.D().at(pt(-1)) == Rational(3, 2));
    CHECK(fixture.D().at(pt(1)) == Rational(1, 2));
    CHECK(fixture.D().at(pt(0, 2)) == Rational(1));
    CHECK(fixture.h() ==
          RationalFunction((Polynomial(1) - Z() * Z()) * pow(Z() + Polynomial(1), 2) *
                           (Z() * Z() + Polynomial(4))));

    std::vector<Move> moves = check_normalize(fixture, ModelType::KleinBottle);
    REQUIRE(moves.size() == 2);
    const MoveTwist* tw = std::get_if<MoveTwist>(&moves[0]);
    REQUIRE(tw != nullptr);
    CHECK(tw->twist.f == RationalFunction(Polynomial(1),
                                          Z() - Polynomial(GaussianRational(Rational(0),
                                                                            Rational(2)))));
    CHECK(tw->twist.lambda == Rational(1));
    CHECK(move_str(moves[1]) == "LocalReduce(-1)");
}

TEST_CASE("normalization: off-center image is moved onto [-1,1]") {
    // Klein bottle presented over [2, 6].
    Polynomial h = (Z() - Polynomial(2)) * (Polynomial(6) - Z());
    DpdPair off = make_pair({CurvePoint::infinity()},
                            {{pt(2), Rational(1, 2)}, {pt(6), Rational(1, 2)}},
                            RationalFunction(h));
    std::vector<Move> moves = check_normalize(off, ModelType::KleinBottle);
    REQUIRE(moves.size() == 2);
    CHECK(move_str(moves[0]) == "Reparametrize(z -> 2*z + 4)");
    CHECK(move_str(moves[1]) == "Twist(1, 1/4)");
}

TEST_CASE("normalization: flip orients the heavier end to -1") {
    DpdPair reversed = make_pair({CurvePoint::infinity()}, {{pt(1), Rational(1, 2)}},
                                 one_minus_z2());
    std::vector<Move> moves = check_normalize(reversed, ModelType::RP2);
    REQUIRE(moves.size() == 1);
    CHECK(move_str(moves[0]) == "FlipSign");
}

TEST_CASE("normalization: real punctures in the empty region are filled") {
    // Plain puncture at 3: a single extension suffices.
    DpdPair pierced = make_pair({pt(3), CurvePoint::infinity()},
                                {{pt(-1), Rational(1, 2)}, {pt(1), Rational(1, 2)}},
                                one_minus_z2());
    std::vector<Move> moves = check_normalize(pierced, ModelType::KleinBottle);
    REQUIRE(moves.size() == 1);
    CHECK(move_str(moves[0]) == "ExtendNegativeReal(3)");

    // With h carrying an even order at the puncture, a clearing twist leads.
    DpdPair heavy = make_pair({pt(3), CurvePoint::infinity()},
                              {{pt(-1), Rational(1, 2)}, {pt(1), Rational(1, 2)}},
                              RationalFunction((Polynomial(1) - Z() * Z()) *
                                               pow(Z() - Polynomial(3), 2)));
    moves = check_normalize(heavy, ModelType::KleinBottle);
    REQUIRE(moves.size() == 2);
    const MoveTwist* tw = std::get_if<MoveTwist>(&moves[0]);
    REQUIRE(tw != nullptr);
    CHECK(tw->twist.f == RationalFunction(Polynomial(1), Z() - Polynomial(3)));
    CHECK(move_str(moves[1]) == "ExtendNegativeReal(3)");
}

TEST_CASE("normalization: circle base with a conjugate divisor") {
    DpdPair pair = make_pair(
        {pt(0, 1), pt(0, -1)}, {{pt(0, 2), Rational(1, 3)}, {pt(0, -2), Rational(2, 3)}},
        RationalFunction(Z() * Z() + Polynomial(4), Polynomial(1) + Z() * Z()));
    std::vector<Move> moves = check_normalize(pair, ModelType::Torus);
    REQUIRE(moves.size() == 3);
    CHECK(std::holds_alternative<MoveTwist>(moves[0]));
    CHECK(move_str(moves[1]) == "RestrictNonReal(2*i, -2*i)");
    CHECK(move_str(moves[2]) == "ExtendNonReal(2*i, -2*i)");
}

TEST_CASE("normalization: torsor special point on the circle base") {
    DpdPair pair = make_pair({pt(0, 1), pt(0, -1)}, {{pt(0), Rational(1)}},
                             RationalFunction(Z() * Z(), Polynomial(1) + Z() * Z()));
    std::vector<Move> moves = check_normalize(pair, ModelType::Torus);
    REQUIRE(moves.size() == 1);
    CHECK(move_str(moves[0]) == "LocalReduce(0)");
}

TEST_CASE("normalization: circle base special at infinity rotates away") {
    DpdPair pair = make_pair({pt(0, 1), pt(0, -1)},
                             {{CurvePoint::infinity(), Rational(1)}},
                             RationalFunction(Polynomial(1), Polynomial(1) + Z() * Z()));
    CHECK(classify_real_locus(pair) == TopologyVerdict::model_verdict(ModelType::Torus));
    std::vector<Move> moves = check_normalize(pair, ModelType::Torus);
    REQUIRE(!moves.empty());
    CHECK(std::holds_alternative<MoveReparametrize>(moves[0]));
}

TEST_CASE("normalization: rejects pairs outside the model table") {
    for (RationalFunction h : {RationalFunction(Z() * Z() - Polynomial(1)),
                               RationalFunction(Z() * Z() + Polynomial(1)),
                               RationalFunction(Polynomial(-1) - Z() * Z())}) {
        DpdPair pair = make_pair({CurvePoint::infinity()}, {}, h);
        auto code = code_of([&] { normalize_to_model(pair); });
        REQUIRE(code.has_value());
        CHECK(*code == ErrorCode::NotAModel);
    }
    // Undetermined circle-base arc is likewise not normalizable.
    DpdPair arc =
        make_pair({pt(0, 1), pt(0, -1)}, {{pt(-1), Rational(1, 2)}, {pt(1), Rational(1, 2)}},
                  RationalFunction(Polynomial(1) - Z() * Z(), Polynomial(1) + Z() * Z()));
    auto code = code_of([&] { normalize_to_model(arc); });
    REQUIRE(code.has_value());
    CHECK(*code == ErrorCode::NotAModel);
    // Singular input surfaces the regularity error.
    for (const DpdPair& pair : singular_pairs()) {
        auto c = code_of([&] { normalize_to_model(pair); });
        REQUIRE(c.has_value());
        CHECK(*c == ErrorCode::NotRegular);
    }
}

TEST_CASE("normalization: random move sequences round-trip") {
    std::mt19937 rng(static_cast<unsigned>(dpd_test_seed) ^ 0x404a11u);
    std::uniform_int_distribution<int> len(1, 6);
    int failures = 0;
    for (ModelType m : all_models()) {
        DpdPair canonical = canonical_pair(m);
        for (int iter = 0; iter < 100; ++iter) {
            DpdPair cur = canonical;
            std::vector<Move> trail;
            int n = len(rng);
            for (int k = 0; k < n; ++k) {
                Move mv = random_move(rng, cur);
                cur = apply_move(cur, mv);
                trail.push_back(mv);
            }
            bool ok = classify_real_locus(cur) == TopologyVerdict::model_verdict(m);
            if (ok) {
                NormalizeResult r = normalize_to_model(cur);
                ok = r.model == m && r.canonical == canonical &&
                     apply_moves(cur, r.moves) == canonical;
            }
            if (!ok) {
                ++failures;
                std::string log;
                for (const Move& mv : trail) log += "  " + move_str(mv) + "\n";
                MESSAGE("round-trip failure for ", model_name(m), " after:\n", log);
            }
        }
    }
    CHECK(failures == 0);
}
