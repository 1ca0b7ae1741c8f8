#include "dpd/parser.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "dpd/errors.hpp"

namespace dpd {

namespace {

std::string strip_code_prefix(const Error& e) {
    std::string what = e.what();
    std::string prefix = std::string(error_code_name(e.code())) + ": ";
    if (what.rfind(prefix, 0) == 0) return what.substr(prefix.size());
    return what;
}

// Recursive-descent reader over one value (an expression, divisor, curve or
// point).  Tracks a 1-based source position so document fragments report
// their location in the enclosing file.
class Reader {
public:
    Reader(const std::string& text, int line, int col)
        : s_(text), line_(line), col_(col) {}

    RationalFunction function_value() {
        RationalFunction v = expr();
        end();
        return v;
    }

    QDivisor divisor_value(std::vector<std::pair<CurvePoint, int>>* spans) {
        QDivisor d = divisor(spans);
        end();
        return d;
    }

    RealCurve curve_value() {
        RealCurve c = curve();
        end();
        return c;
    }

    CurvePoint point_value() {
        CurvePoint p = point();
        end();
        return p;
    }

    Rational rational_value() {
        skip_ws();
        bool neg = match('-');
        Rational r = rational_literal();
        end();
        return neg ? -r : r;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    int line_, col_;

    [[noreturn]] void syntax(const std::string& msg) const {
        throw ParseError(ErrorCode::SyntaxError, msg, line_, col_);
    }

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[i_]; }

    void advance() {
        if (eof()) return;
        if (s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool match(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (!match(c)) syntax("expected '" + std::string(1, c) + "' " + what);
    }

    void end() {
        skip_ws();
        if (!eof()) syntax("unexpected trailing input '" + std::string(1, peek()) + "'");
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (!eof() && std::isalnum(static_cast<unsigned char>(peek())))
            out += s_[i_], advance();
        return out;
    }

    Integer digits() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) syntax("expected a number");
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            out += s_[i_], advance();
        return Integer(out);
    }

    Rational rational_literal() {
        Integer num = digits();
        if (peek() != '/') return Rational(num);
        advance();
        Integer den = digits();
        if (den == 0)
            throw ParseError(ErrorCode::ZeroDenominator, "zero denominator", line_, col_);
        return Rational(num, den);
    }

    long exponent() {
        skip_ws();
        bool neg = match('-');
        Integer e = digits();
        if (!e.fits_slong_p() || e.get_si() > 4096)
            throw ParseError(ErrorCode::LimitExceeded, "exponent too large", line_, col_);
        return neg ? -e.get_si() : e.get_si();
    }

    // expr := term (('+'|'-') term)*
    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            skip_ws();
            if (match('+')) v = v + term();
            else if (match('-')) v = v - term();
            else return v;
        }
    }

    // term := factor (('*'|'/') factor)*
    RationalFunction term() {
        RationalFunction v = factor();
        for (;;) {
            skip_ws();
            if (match('*')) {
                v = v * factor();
            } else if (match('/')) {
                int l = line_, c = col_;
                RationalFunction d = factor();
                if (d.is_zero())
                    throw ParseError(ErrorCode::ZeroDenominator, "division by zero", l, c);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    // factor := ('-'|'+')* atom ('^' exponent)?
    RationalFunction factor() {
        skip_ws();
        if (match('-')) return -factor();
        if (match('+')) return factor();
        RationalFunction v = atom();
        skip_ws();
        if (match('^')) {
            int l = line_, c = col_;
            long e = exponent();
            if (v.is_zero() && e < 0)
                throw ParseError(ErrorCode::ZeroDenominator, "zero to a negative power", l, c);
            return pow(v, e);
        }
        return v;
    }

    RationalFunction atom() {
        skip_ws();
        if (match('(')) {
            RationalFunction v = expr();
            expect(')', "to close the parenthesis");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return RationalFunction(GaussianRational(Rational(digits())));
        std::string name = ident();
        if (name == "z") return RationalFunction(Polynomial::z());
        if (name == "i") return RationalFunction(GaussianRational::i());
        if (name.empty())
            syntax(eof() ? std::string("expected expression")
                         : "unexpected character '" + std::string(1, peek()) + "'");
        syntax("unknown name '" + name + "' (expected z, i, or a number)");
    }

    CurvePoint point() {
        skip_ws();
        size_t save_i = i_;
        int save_line = line_, save_col = col_;
        std::string name = ident();
        if (name == "inf") return CurvePoint::infinity();
        i_ = save_i, line_ = save_line, col_ = save_col;
        RationalFunction v = expr();
        if (!v.is_constant())
            throw ParseError(ErrorCode::SemanticError,
                             "a point must be a constant or 'inf'", save_line, save_col);
        return CurvePoint(v.evaluate(GaussianRational(0)));
    }

    // divisor := '0' | ('-')? dterm (('+'|'-') dterm)*
    // dterm   := rational '*' '[' point ']' | '[' point ']'
    QDivisor divisor(std::vector<std::pair<CurvePoint, int>>* spans) {
        QDivisor d;
        skip_ws();
        if (peek() == '0') {
            size_t save_i = i_;
            int save_line = line_, save_col = col_;
            advance();
            skip_ws();
            if (eof()) return d;
            i_ = save_i, line_ = save_line, col_ = save_col;
        }
        bool neg = match('-');
        for (;;) {
            skip_ws();
            Rational coeff(1);
            if (peek() != '[') {
                coeff = rational_literal();
                expect('*', "between coefficient and point");
            }
            expect('[', "around the point");
            int pcol = col_;
            CurvePoint p = point();
            expect(']', "after the point");
            d.add_term(p, neg ? -coeff : coeff);
            if (spans) spans->emplace_back(p, pcol);
            skip_ws();
            if (match('+')) neg = false;
            else if (match('-')) neg = true;
            else return d;
        }
    }

    // curve := 'P1' 'minus' '[' point (',' point)* ']'
    RealCurve curve() {
        int l = line_, c = col_;
        if (ident() != "P1") syntax("expected 'P1'");
        if (ident() != "minus") syntax("expected 'minus'");
        expect('[', "to open the removed-point list");
        std::vector<CurvePoint> removed;
        do {
            removed.push_back(point());
            skip_ws();
        } while (match(','));
        expect(']', "to close the removed-point list");
        try {
            return RealCurve(std::move(removed));
        } catch (const Error& e) {
            throw ParseError(e.code(), strip_code_prefix(e), l, c);
        }
    }
};

} // namespace

RationalFunction parse_function(const std::string& text) {
    return Reader(text, 1, 1).function_value();
}

QDivisor parse_divisor(const std::string& text) {
    return Reader(text, 1, 1).divisor_value(nullptr);
}

RealCurve parse_curve(const std::string& text) {
    return Reader(text, 1, 1).curve_value();
}

CurvePoint parse_point(const std::string& text) {
    return Reader(text, 1, 1).point_value();
}

Rational parse_rational(const std::string& text) {
    return Reader(text, 1, 1).rational_value();
}

Mobius parse_mobius(const std::string& text) {
    RationalFunction f = parse_function(text);
    const Polynomial& num = f.numerator();
    const Polynomial& den = f.denominator();
    if (num.degree() > 1 || den.degree() > 1)
        fail(ErrorCode::InvalidMobius, "psi must be a fractional-linear map, got " + f.str());
    auto real_part = [](const GaussianRational& g) {
        if (!g.is_real())
            fail(ErrorCode::InvalidMobius, "psi must have real coefficients");
        return g.re();
    };
    return Mobius(real_part(num.coeff(1)), real_part(num.coeff(0)),
                  real_part(den.coeff(1)), real_part(den.coeff(0)));
}

PairDocument parse_pair_document(const std::string& text) {
    struct Field {
        std::string value;
        int line = 0;
        int col = 0;
        bool seen = false;
    };
    std::map<std::string, Field> fields = {{"curve", {}}, {"D", {}}, {"h", {}}};

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        size_t start = line.find_first_not_of(" \t\r");
        if (start != std::string::npos) {
            size_t colon = line.find(':', start);
            if (colon == std::string::npos)
                throw ParseError(ErrorCode::SyntaxError, "expected 'key: value'", line_no,
                                 static_cast<int>(start) + 1);
            size_t key_end = line.find_last_not_of(" \t", colon - 1);
            std::string key = line.substr(start, key_end - start + 1);
            auto it = fields.find(key);
            if (it == fields.end())
                throw ParseError(ErrorCode::SyntaxError,
                                 "unknown key '" + key + "' (expected curve, D, or h)",
                                 line_no, static_cast<int>(start) + 1);
            if (it->second.seen)
                throw ParseError(ErrorCode::SyntaxError, "duplicate key '" + key + "'",
                                 line_no, static_cast<int>(start) + 1);
            size_t vstart = line.find_first_not_of(" \t", colon + 1);
            if (vstart == std::string::npos) vstart = colon + 1;
            it->second = {line.substr(vstart), line_no, static_cast<int>(vstart) + 1, true};
        }
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    for (const auto& [key, field] : fields)
        if (!field.seen)
            throw ParseError(ErrorCode::SyntaxError, "missing key '" + key + "'", line_no, 1);

    const Field& fc = fields["curve"];
    const Field& fd = fields["D"];
    const Field& fh = fields["h"];
    RealCurve curve = Reader(fc.value, fc.line, fc.col).curve_value();
    std::vector<std::pair<CurvePoint, int>> spans;
    QDivisor D = Reader(fd.value, fd.line, fd.col).divisor_value(&spans);
    for (const auto& [p, col] : spans)
        if (!curve.contains(p))
            throw ParseError(ErrorCode::SemanticError,
                             "divisor point " + p.str() + " is removed from the curve",
                             fd.line, col);
    RationalFunction h = Reader(fh.value, fh.line, fh.col).function_value();
    return {text, dpd_validate(curve, D, h)};
}

} // namespace dpd
