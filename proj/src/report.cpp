#include "dpd/report.hpp"

#include <variant>

#include "dpd/errors.hpp"

namespace dpd {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

Json point_strings(const std::vector<CurvePoint>& points) {
    Json out = Json::array();
    for (const CurvePoint& p : points) out.push_back(p.str());
    return out;
}

} // namespace

std::string render_diagram(const DpdPair& pair) {
    if (pair.curve().kind() != CurveKind::IntervalType)
        fail(ErrorCode::SemanticError, "diagram requires an interval-type base");
    FiberReport rep = fiber_report(pair);
    const size_t n = rep.breakpoints.size();
    const bool has_inf = n > 0 && rep.breakpoints.back().point.is_infinity();
    const size_t m = n - (has_inf ? 1 : 0); // finite breakpoints, ascending

    auto positive = [&](size_t arc) {
        return rep.arcs[arc].generic == RealFiberType::TorsorRealCircle;
    };
    constexpr size_t gap = 11, edge = 5;

    if (m == 0) // only the puncture at infinity: one region spanning the line
        return "(" + std::string(gap, positive(0) ? '=' : '-') + ")";

    std::string top;
    std::vector<std::pair<size_t, std::string>> labels;

    // Region arriving from -infinity; drawn only when it carries real points.
    if (positive(n - 1)) {
        if (!has_inf) {
            top += "~";
        } else if (rep.breakpoints[m].is_puncture) {
            top += "(";
        } else {
            labels.emplace_back(top.size(), "inf");
            top += fiber_type_letter(*rep.breakpoints[m].fiber);
            top += "[";
        }
        top += std::string(edge, '=');
    }

    for (size_t k = 0; k < m; ++k) {
        const Breakpoint& b = rep.breakpoints[k];
        const bool left = positive((k + n - 1) % n);
        const bool right = positive(k);
        std::string cell;
        size_t anchor_off = 0;
        if (b.is_puncture) {
            cell = left && right ? ")(" : right ? "(" : left ? ")" : "o";
        } else {
            const char letter = fiber_type_letter(*b.fiber);
            if (left && !right) {
                cell = std::string("]") + letter;
                anchor_off = 1;
            } else if (!left && right) {
                cell = std::string(1, letter) + "[";
            } else {
                cell = std::string(1, letter);
            }
        }
        labels.emplace_back(top.size() + anchor_off, b.point.str());
        top += cell;
        if (k + 1 < m) top += std::string(gap, positive(k) ? '=' : '-');
    }

    // Region heading to +infinity.
    if (positive(m - 1)) {
        top += std::string(edge, '=');
        if (!has_inf) {
            top += "~";
        } else if (rep.breakpoints[m].is_puncture) {
            top += ")";
        } else {
            top += "]";
            labels.emplace_back(top.size(), "inf");
            top += fiber_type_letter(*rep.breakpoints[m].fiber);
        }
    }

    std::string bottom;
    for (const auto& [col, text] : labels) {
        size_t at = std::max(col, bottom.empty() ? size_t(0) : bottom.size() + 1);
        bottom += std::string(at - bottom.size(), ' ') + text;
    }
    return bottom.empty() ? top : top + "\n" + bottom;
}

Json pair_json(const DpdPair& pair) {
    return Json{{"curve", pair.curve().str()}, {"D", pair.D().str()}, {"h", pair.h().str()}};
}

Json verdict_json(const TopologyVerdict& verdict) {
    Json j;
    switch (verdict.kind) {
        case TopologyVerdict::Kind::Model: j["kind"] = "Model"; break;
        case TopologyVerdict::Kind::EmptyRealLocus: j["kind"] = "EmptyRealLocus"; break;
        case TopologyVerdict::Kind::NonCompactOrNotConnected:
            j["kind"] = "NonCompactOrNotConnected";
            break;
        case TopologyVerdict::Kind::Undetermined: j["kind"] = "Undetermined"; break;
    }
    if (verdict.model) j["model"] = model_name(*verdict.model);
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    return j;
}

Json move_json(const Move& move) {
    return std::visit(
        overloaded{
            [](const MoveTwist& t) {
                return Json{{"kind", "Twist"},
                            {"f", t.twist.f.str()},
                            {"lambda", t.twist.lambda.str()}};
            },
            [](const MoveRestrictNonReal& r) {
                return Json{{"kind", "RestrictNonReal"}, {"points", point_strings(r.points)}};
            },
            [](const MoveExtendNonReal& e) {
                return Json{{"kind", "ExtendNonReal"}, {"points", point_strings(e.points)}};
            },
            [](const MoveExtendNegativeReal& e) {
                return Json{{"kind", "ExtendNegativeReal"},
                            {"points", point_strings(e.points)}};
            },
            [](const MoveReparametrize& r) {
                return Json{{"kind", "Reparametrize"},
                            {"a", r.map.a().str()},
                            {"b", r.map.b().str()},
                            {"c", r.map.c().str()},
                            {"d", r.map.d().str()},
                            {"map", r.map.str()}};
            },
            [](const MoveLocalReduce& l) {
                return Json{{"kind", "LocalReduce"}, {"point", l.point.str()}};
            },
            [](const MoveFlipSign&) { return Json{{"kind", "FlipSign"}}; },
        },
        move);
}

Json moves_json(const std::vector<Move>& moves) {
    Json out = Json::array();
    for (const Move& m : moves) out.push_back(move_json(m));
    return out;
}

Json fiber_report_json(const FiberReport& report) {
    Json breakpoints = Json::array();
    for (const Breakpoint& b : report.breakpoints) {
        Json j{{"point", b.point.str()}, {"puncture", b.is_puncture}};
        if (b.fiber) {
            j["fiber"] = fiber_type_name(*b.fiber);
            j["letter"] = std::string(1, fiber_type_letter(*b.fiber));
        }
        breakpoints.push_back(std::move(j));
    }
    Json arcs = Json::array();
    for (const Arc& a : report.arcs)
        arcs.push_back(Json{{"sample", a.sample.str()}, {"generic", fiber_type_name(a.generic)}});
    Json conj = Json::array();
    for (const ConjPairFiber& c : report.conjugate_pairs) {
        Json j{{"point", c.q.str()}, {"type", conj_fiber_name(c.type)}};
        if (c.type.kind == ConjFiberType::Kind::ExceptionalPairMultM)
            j["multiplicity"] = c.type.multiplicity;
        conj.push_back(std::move(j));
    }
    return Json{{"breakpoints", std::move(breakpoints)},
                {"arcs", std::move(arcs)},
                {"conjugate_pairs", std::move(conj)},
                {"used_infinity_chart", report.used_infinity_chart}};
}

} // namespace dpd
