#include <doctest.h>

#include "dpd/parser.hpp"
#include "dpd/report.hpp"
#include "test_util.hpp"

using namespace dpd;
using namespace dpd_test;

namespace {

DpdPair doc(const std::string& text) { return parse_pair_document(text).pair; }

} // namespace

TEST_CASE("diagrams for the model pairs") {
    CHECK(render_diagram(doc("curve: P1 minus [inf]\n"
                             "D: 1/2*[-1] + 1/2*[1]\n"
                             "h: 1 - z^2\n")) == "b[===========]b\n"
                                                "-1            1");
    CHECK(render_diagram(doc("curve: P1 minus [inf]\n"
                             "D: 0\n"
                             "h: 1 - z^2\n")) == "c[===========]c\n"
                                                "-1            1");
    CHECK(render_diagram(doc("curve: P1 minus [inf]\n"
                             "D: 1/2*[-1]\n"
                             "h: 1 - z^2\n")) == "b[===========]c\n"
                                                "-1            1");
}

TEST_CASE("diagrams for non-model images") {
    // empty locus: an axis with no shaded region
    CHECK(render_diagram(doc("curve: P1 minus [inf]\nD: 0\nh: -1 - z^2\n")) ==
          "(-----------)");
    // the whole line is covered, open at the puncture at infinity
    CHECK(render_diagram(doc("curve: P1 minus [inf]\nD: 0\nh: z^2 + 1\n")) ==
          "(===========)");
    // two unbounded rays
    CHECK(render_diagram(doc("curve: P1 minus [inf]\nD: 0\nh: z^2 - 1\n")) ==
          "(=====]c-----------c[=====)\n"
          "       -1          1");
    // two bounded components
    CHECK(render_diagram(doc("curve: P1 minus [inf]\nD: 0\nh: (z^2 - 4)*(9 - z^2)\n")) ==
          "c[===========]c-----------c[===========]c\n"
          "-3            -2          2             3");
    // an interior puncture splits the shaded run
    CHECK(render_diagram(doc("curve: P1 minus [0, inf]\n"
                             "D: 1/2*[-1] + 1/2*[1]\n"
                             "h: z^2*(1 - z^2)\n")) == "b[===========)(===========]b\n"
                                                      "-1           0             1");
    // an interior torsor point sits inline in the shading
    CHECK(render_diagram(doc("curve: P1 minus [inf]\nD: 1*[0]\nh: z^2\n")) ==
          "(=====a=====)\n"
          "      0");
    // a puncture inside a dead region renders as 'o'
    CHECK(render_diagram(doc("curve: P1 minus [3, inf]\n"
                             "D: 1/2*[-1] + 1/2*[1]\n"
                             "h: 1 - z^2\n")) == "b[===========]b-----------o\n"
                                                "-1            1           3");
}

TEST_CASE("diagram requires an interval-type base") {
    CHECK(code_of([] {
              render_diagram(doc("curve: P1 minus [i, -i]\nD: 0\nh: 1\n"));
          }) == ErrorCode::SemanticError);
}

TEST_CASE("moves serialize with exact parameters") {
    Json tw = move_json(MoveTwist{TwistData(
        RationalFunction(Polynomial(1), Z() - Polynomial(3)), Rational(1, 4))});
    CHECK(tw["kind"] == "Twist");
    CHECK(tw["f"] == "(1)/(-3 + z)");
    CHECK(tw["lambda"] == "1/4");

    Json rs = move_json(MoveRestrictNonReal{{pt(0, 2), pt(0, -2)}});
    CHECK(rs["kind"] == "RestrictNonReal");
    CHECK(rs["points"] == Json::array({"2*i", "-2*i"}));

    Json rp = move_json(MoveReparametrize{Mobius::affine(Rational(2), Rational(4))});
    CHECK(rp["kind"] == "Reparametrize");
    CHECK(rp["a"] == "2");
    CHECK(rp["b"] == "4");
    CHECK(rp["c"] == "0");
    CHECK(rp["d"] == "1");
    CHECK(rp["map"] == "2*z + 4");

    CHECK(move_json(MoveLocalReduce{pt(-1)}) ==
          Json{{"kind", "LocalReduce"}, {"point", "-1"}});
    CHECK(move_json(MoveFlipSign{}) == Json{{"kind", "FlipSign"}});

    Json list = moves_json({MoveFlipSign{}, MoveLocalReduce{pt(0)}});
    CHECK(list.size() == 2);
    CHECK(list[1]["point"] == "0");
}

TEST_CASE("fiber reports serialize completely") {
    Json j = fiber_report_json(fiber_report(intro_pair()));
    REQUIRE(j["breakpoints"].size() == 3);
    CHECK(j["breakpoints"][0] == Json{{"point", "-1"},
                                      {"puncture", false},
                                      {"fiber", "ExceptionalMu2"},
                                      {"letter", "b"}});
    CHECK(j["breakpoints"][2] == Json{{"point", "inf"}, {"puncture", true}});
    REQUIRE(j["arcs"].size() == 3);
    CHECK(j["arcs"][0]["generic"] == "TorsorRealCircle");
    CHECK(j["conjugate_pairs"].empty());

    Json k = fiber_report_json(
        fiber_report(doc("curve: P1 minus [inf]\nD: 1/3*[2*i] + 2/3*[-2*i]\nh: z^2 + 4\n")));
    REQUIRE(k["conjugate_pairs"].size() == 1);
    CHECK(k["conjugate_pairs"][0] == Json{{"point", "2*i"},
                                          {"type", "ExceptionalPairMult3"},
                                          {"multiplicity", 3}});
}

TEST_CASE("verdict and pair serialization") {
    CHECK(verdict_json(TopologyVerdict::model_verdict(ModelType::KleinBottle)) ==
          Json{{"kind", "Model"}, {"model", "KleinBottle"}});
    Json empty = verdict_json(TopologyVerdict::empty_locus());
    CHECK(empty["kind"] == "EmptyRealLocus");
    Json nc = verdict_json(TopologyVerdict::non_compact("two components"));
    CHECK(nc["kind"] == "NonCompactOrNotConnected");
    CHECK(nc["reason"] == "two components");

    CHECK(pair_json(intro_pair()) == Json{{"curve", "P1 minus [inf]"},
                                          {"D", "1/2*[-1] + 1/2*[1]"},
                                          {"h", "1 - z^2"}});
}

TEST_CASE("report bodies survive a dump and reparse") {
    Json j = fiber_report_json(fiber_report(intro_pair()));
    CHECK(Json::parse(j.dump()) == j);
    Json v = verdict_json(TopologyVerdict::undetermined("proper arc"));
    CHECK(Json::parse(v.dump(2)) == v);
}
