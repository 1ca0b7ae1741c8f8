#include "dpd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _WIN32
#define DPD_ISATTY() false
#else
#include <unistd.h>
#define DPD_ISATTY() (isatty(1) != 0)
#endif

#include "CLI11.hpp"

#include "dpd/errors.hpp"
#include "dpd/parser.hpp"
#include "dpd/printer.hpp"
#include "dpd/report.hpp"
#include "dpd/torsor.hpp"

namespace dpd {

namespace {

struct Style {
    bool on = false;
    std::string wrap(const std::string& s, const char* code) const {
        return on ? "\033[" + std::string(code) + "m" + s + "\033[0m" : s;
    }
    std::string good(const std::string& s) const { return wrap(s, "32"); }
    std::string bad(const std::string& s) const { return wrap(s, "31"); }
};

bool color_enabled(const std::ostream& out) {
    if (const char* v = std::getenv("DPD_COLOR"); v && std::string(v) == "0") return false;
    return &out == &std::cout && DPD_ISATTY();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::SemanticError, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* obstruction_kind_name(NormObstruction::Kind k) {
    return k == NormObstruction::Kind::OddOrderAt ? "OddOrderAt" : "NegativeSign";
}

bool is_validation_verdict(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroFunction:
        case ErrorCode::NonGaussianRoots:
        case ErrorCode::EmptyRemovedSet:
        case ErrorCode::NotConjugationStable:
        case ErrorCode::NotReal:
        case ErrorCode::ValidityViolation:
        case ErrorCode::PointNotOnCurve:
        case ErrorCode::SemanticError: return true;
        default: return false;
    }
}

Report cmd_validate(const std::string& text, const Style& st) {
    Report r;
    r.command = "validate";
    r.body["command"] = "validate";
    try {
        PairDocument doc = parse_pair_document(text);
        r.exit_code = 0;
        r.body["valid"] = true;
        r.body["pair"] = pair_json(doc.pair);
        r.text = st.good("valid") + "\n" + print_pair_document(doc.pair);
    } catch (const ParseError& e) {
        if (e.code() == ErrorCode::SyntaxError || !is_validation_verdict(e.code())) throw;
        r.exit_code = 1;
        r.body["valid"] = false;
        r.body["error"] = Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
        r.text = st.bad("invalid") + ": " + e.what() + "\n";
    } catch (const Error& e) {
        if (!is_validation_verdict(e.code())) throw;
        r.exit_code = 1;
        r.body["valid"] = false;
        r.body["error"] = Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
        r.text = st.bad("invalid") + ": " + e.what() + "\n";
    }
    return r;
}

Report cmd_smooth(const std::string& text, const Style& st) {
    PairDocument doc = parse_pair_document(text);
    RegularityResult res = dpd_is_regular(doc.pair);
    Report r;
    r.command = "smooth";
    r.body["command"] = "smooth";
    r.body["regular"] = res.regular;
    if (res.regular) {
        r.exit_code = 0;
        r.text = st.good("regular") + "\n";
    } else {
        r.exit_code = 1;
        r.body["witness"] = Json{{"point", res.witness->str()},
                                 {"r1", res.r1.str()},
                                 {"r2", res.r2.str()}};
        r.text = st.bad("not regular") + ": witness point " + res.witness->str() +
                 " with fractions (" + res.r1.str() + ", " + res.r2.str() + ")\n";
    }
    return r;
}

Report cmd_fibers(const std::string& text, const std::string& at, const Style&) {
    PairDocument doc = parse_pair_document(text);
    Report r;
    r.command = "fibers";
    r.body["command"] = "fibers";
    if (!at.empty()) {
        CurvePoint p = parse_point(at);
        Json j{{"point", p.str()}};
        if (p.is_real()) {
            RealFiberType t = classify_real_fiber(doc.pair, p);
            j["fiber"] = fiber_type_name(t);
            j["letter"] = std::string(1, fiber_type_letter(t));
            r.text = "fiber at " + p.str() + ": " + fiber_type_name(t) + " (" +
                     fiber_type_letter(t) + ")\n";
        } else {
            ConjFiberType t = classify_conjugate_fiber(doc.pair, p);
            j["fiber"] = conj_fiber_name(t);
            r.text = "fiber at {" + p.str() + ", " + p.conj().str() +
                     "}: " + conj_fiber_name(t) + "\n";
        }
        r.body["at"] = std::move(j);
        return r;
    }
    FiberReport rep = fiber_report(doc.pair);
    r.body["report"] = fiber_report_json(rep);
    std::ostringstream out;
    out << "breakpoints:\n";
    if (rep.breakpoints.empty()) out << "  (none)\n";
    for (const Breakpoint& b : rep.breakpoints) {
        out << "  " << b.point.str() << ": ";
        if (b.is_puncture)
            out << "puncture\n";
        else
            out << fiber_type_name(*b.fiber) << " (" << fiber_type_letter(*b.fiber) << ")\n";
    }
    out << "arcs:\n";
    for (const Arc& a : rep.arcs)
        out << "  sample " << a.sample.str() << ": " << fiber_type_name(a.generic) << "\n";
    out << "conjugate pairs:\n";
    if (rep.conjugate_pairs.empty()) out << "  (none)\n";
    for (const ConjPairFiber& c : rep.conjugate_pairs)
        out << "  {" << c.q.str() << ", " << c.q.conj().str()
            << "}: " << conj_fiber_name(c.type) << "\n";
    if (doc.pair.curve().kind() == CurveKind::IntervalType) {
        std::string diagram = render_diagram(doc.pair);
        r.body["diagram"] = diagram;
        out << diagram << "\n";
    }
    r.text = out.str();
    return r;
}

Report cmd_classify(const std::string& text, const Style& st) {
    PairDocument doc = parse_pair_document(text);
    TopologyVerdict v = classify_real_locus(doc.pair);
    Report r;
    r.command = "classify";
    r.exit_code = v.kind == TopologyVerdict::Kind::Model ? 0 : 1;
    r.body["command"] = "classify";
    r.body["verdict"] = verdict_json(v);
    r.body["image"] = real_image(doc.pair).str();
    std::ostringstream out;
    out << (r.exit_code == 0 ? st.good(v.str()) : st.bad(v.str())) << "\n";
    out << "image: " << real_image(doc.pair).str() << "\n";
    if (doc.pair.curve().kind() == CurveKind::IntervalType) {
        std::string diagram = render_diagram(doc.pair);
        r.body["diagram"] = diagram;
        out << diagram << "\n";
    }
    r.text = out.str();
    return r;
}

Report cmd_normalize(const std::string& text, const Style& st) {
    PairDocument doc = parse_pair_document(text);
    Report r;
    r.command = "normalize";
    r.body["command"] = "normalize";
    try {
        NormalizeResult res = normalize_to_model(doc.pair);
        r.exit_code = 0;
        r.body["model"] = model_name(res.model);
        r.body["moves"] = moves_json(res.moves);
        r.body["canonical"] = pair_json(res.canonical);
        std::ostringstream out;
        out << "model: " << st.good(model_name(res.model)) << "\n";
        out << "moves:\n";
        if (res.moves.empty()) out << "  (none)\n";
        for (size_t k = 0; k < res.moves.size(); ++k)
            out << "  " << k + 1 << ". " << move_str(res.moves[k]) << "\n";
        out << "canonical pair:\n" << print_pair_document(res.canonical);
        r.text = out.str();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotAModel) throw;
        r.exit_code = 1;
        r.body["model"] = nullptr;
        r.body["error"] = Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
        r.text = st.bad("not a model") + ": " + e.what() + "\n";
    }
    return r;
}

Report cmd_sections(const std::string& text, long degree, const Style&) {
    PairDocument doc = parse_pair_document(text);
    RationalFunction g = section_generator(doc.pair, degree);
    RationalFunction sg = sigma_on_section(doc.pair, degree, g);
    Report r;
    r.command = "sections";
    r.body["command"] = "sections";
    r.body["degree"] = degree;
    r.body["generator"] = g.str();
    r.body["sigma_of_generator"] = sg.str();
    r.text = "g_" + std::to_string(degree) + " = " + g.str() + "\nsigma(g_" +
             std::to_string(degree) + ") = " + sg.str() + "\n";
    return r;
}

Report cmd_torsor(const std::string& text, const Style& st) {
    PairDocument doc = parse_pair_document(text);
    NormResult res = norm_equation(doc.pair.h(), doc.pair.curve());
    Report r;
    r.command = "torsor";
    r.body["command"] = "torsor";
    r.body["trivial"] = res.trivial();
    if (res.trivial()) {
        r.exit_code = 0;
        r.body["witness"] = Json{{"g", res.witness->g.str()},
                                 {"lambda", res.witness->lambda.str()},
                                 {"verified", true}};
        r.text = st.good("Trivial") + ": h = " + res.witness->lambda.str() + " * g * conj(g) with g = " +
                 res.witness->g.str() + "\n";
    } else {
        r.exit_code = 1;
        Json j{{"kind", obstruction_kind_name(res.obstruction->kind)}};
        if (res.obstruction->point) j["point"] = res.obstruction->point->str();
        r.body["obstruction"] = std::move(j);
        r.text = st.bad("Nontrivial") + ": " + obstruction_str(*res.obstruction) + "\n";
    }
    return r;
}

Report cmd_equiv(const std::string& text1, const std::string& text2, const std::string& f_str,
                 const std::string& psi_str, const std::string& lambda_str, const Style& st) {
    PairDocument d1 = parse_pair_document(text1);
    PairDocument d2 = parse_pair_document(text2);
    Mobius psi = parse_mobius(psi_str);
    RationalFunction f = parse_function(f_str);
    Rational lambda = parse_rational(lambda_str);
    bool ok = verify_equivalence(d1.pair, d2.pair, psi, f, lambda);
    Report r;
    r.command = "equiv";
    r.exit_code = ok ? 0 : 1;
    r.body["command"] = "equiv";
    r.body["equivalent"] = ok;
    r.body["certificate"] =
        Json{{"psi", psi.str()}, {"f", f.str()}, {"lambda", lambda.str()}};
    r.text = ok ? st.good("equivalent") + " (certificate verified)\n"
                : st.bad("not equivalent") + ": certificate does not verify\n";
    return r;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact calculus of real DPD pairs for surfaces with a circle action", "dpd"};
    app.require_subcommand(1);

    struct {
        std::string file, file2, at;
        std::string f = "1", psi = "z", lambda = "1";
        bool json = false;
        long m = 1;
    } opt;

    auto add_common = [&](CLI::App* c) {
        c->add_option("file", opt.file, "pair document")->required();
        c->add_flag("--json", opt.json, "emit the JSON report");
        return c;
    };
    CLI::App* validate = add_common(app.add_subcommand("validate", "check a pair document"));
    CLI::App* smooth = add_common(app.add_subcommand("smooth", "test smoothness of the surface"));
    CLI::App* fibers = add_common(app.add_subcommand("fibers", "survey the quotient fibers"));
    fibers->add_option("--at", opt.at, "classify the fiber over one point");
    CLI::App* classify =
        add_common(app.add_subcommand("classify", "identify the topology of the real locus"));
    CLI::App* normalize =
        add_common(app.add_subcommand("normalize", "reduce to the canonical model pair"));
    CLI::App* sections =
        add_common(app.add_subcommand("sections", "generator of a graded piece"));
    sections->add_option("-m,--degree", opt.m, "graded degree")->required();
    CLI::App* torsor =
        add_common(app.add_subcommand("torsor", "solve the norm equation for h"));
    CLI::App* equiv =
        add_common(app.add_subcommand("equiv", "verify an equivalence certificate"));
    equiv->add_option("file2", opt.file2, "second pair document")->required();
    equiv->add_option("--f", opt.f, "twist function");
    equiv->add_option("--psi", opt.psi, "reparametrization (fractional-linear in z)");
    equiv->add_option("--lambda", opt.lambda, "positive scale");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Style st{color_enabled(out)};
    try {
        Report r;
        if (*validate) r = cmd_validate(read_file(opt.file), st);
        else if (*smooth) r = cmd_smooth(read_file(opt.file), st);
        else if (*fibers) r = cmd_fibers(read_file(opt.file), opt.at, st);
        else if (*classify) r = cmd_classify(read_file(opt.file), st);
        else if (*normalize) r = cmd_normalize(read_file(opt.file), st);
        else if (*sections) r = cmd_sections(read_file(opt.file), opt.m, st);
        else if (*torsor) r = cmd_torsor(read_file(opt.file), st);
        else if (*equiv)
            r = cmd_equiv(read_file(opt.file), read_file(opt.file2), opt.f, opt.psi,
                          opt.lambda, st);
        else
            fail(ErrorCode::UnknownCommand, "no command selected");
        r.body["exit_code"] = r.exit_code;
        if (opt.json)
            out << r.body.dump(2) << "\n";
        else
            out << r.text;
        return r.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace dpd
