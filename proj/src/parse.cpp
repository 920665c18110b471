#include "curveh1/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curveh1 {

namespace {

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;
    const RingPtr& ring;
    int line;
    int col0;  // column of s[0] in the original file line

    int column() const { return col0 + static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, column()); }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    bool at_integer() {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected an integer");
        return Integer(s.substr(start, pos - start));
    }

    bool at_atom() {
        skip_ws();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    QPoly atom() {
        skip_ws();
        if (eat('(')) {
            QPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return power(inner);
        }
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected a variable or '('");
        std::string name = s.substr(start, pos - start);
        int idx = var_index(*ring, name);
        if (idx < 0) {
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        return power(QPoly::variable(ring, static_cast<std::size_t>(idx)));
    }

    QPoly power(QPoly base) {
        if (eat('^')) {
            Integer e = integer();
            if (e < 0 || e > 64) fail("exponent out of range");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    QPoly term() {
        QPoly out = QPoly::constant(ring, 1);
        bool saw_something = false;
        if (at_integer()) {
            Integer num = integer();
            Integer den = 1;
            if (eat('/')) {
                den = integer();
                if (den <= 0) fail("denominator must be positive");
            }
            out = QPoly::constant(ring, make_rational(num, den));
            saw_something = true;
        }
        while (at_atom()) {
            out *= atom();
            saw_something = true;
        }
        if (!saw_something) fail("expected a term");
        return out;
    }

    QPoly expr() {
        skip_ws();
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        QPoly out = term();
        if (negate) out = -out;
        while (true) {
            skip_ws();
            if (eat('+'))
                out += term();
            else if (eat('-'))
                out -= term();
            else
                break;
        }
        return out;
    }

    QPoly parse_all() {
        QPoly out = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return out;
    }
};

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

QPoly parse_polynomial(const std::string& text, const RingPtr& ring, int line, int column_offset) {
    ExprParser p{text, 0, ring, line, column_offset};
    return p.parse_all();
}

ParsedInput parse_curve_spec(const std::string& text) {
    ParsedInput in;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string no_comment = raw.substr(0, raw.find('#'));
        std::string s = strip(no_comment);
        if (s.empty()) continue;

        std::size_t colon = no_comment.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno, 1);
        std::string key = strip(no_comment.substr(0, colon));
        std::string value = no_comment.substr(colon + 1);
        int value_col = static_cast<int>(colon) + 1;

        if (key == "ring") {
            if (in.ring) throw ParseError("ring declared twice", lineno, 1);
            std::vector<std::string> names;
            for (auto& part : split(value, ',')) {
                std::string name = strip(part);
                if (!valid_identifier(name))
                    throw ParseError("invalid variable name '" + name + "'", lineno, value_col);
                names.push_back(name);
            }
            if (names.empty()) throw ParseError("empty ring", lineno, value_col);
            in.ring = make_ring(std::move(names));
        } else if (key == "factor") {
            if (!in.ring) throw ParseError("ring not declared", lineno, 1);
            QPoly f = parse_polynomial(value, in.ring, lineno, value_col);
            if (f.is_zero()) throw ParseError("zero factor", lineno, value_col);
            in.factors.push_back(std::move(f));
        } else if (key == "weights") {
            for (auto& part : split(value, ',')) {
                try {
                    in.weights.push_back(std::stoi(strip(part)));
                } catch (const std::exception&) {
                    throw ParseError("invalid weight '" + strip(part) + "'", lineno, value_col);
                }
            }
        } else if (key == "tag") {
            std::string tag = strip(value);
            if (tag == "tame")
                in.tame = true;
            else if (tag == "lci")
                in.lci_tag = true;
            else if (tag == "section6")
                in.section6 = true;
            else if (tag.rfind("monomial(", 0) == 0 && tag.back() == ')') {
                std::string inner = tag.substr(9, tag.size() - 10);
                for (auto& part : split(inner, ','))
                    try {
                        in.monomial_gens.push_back(std::stol(strip(part)));
                    } catch (const std::exception&) {
                        throw ParseError("invalid monomial generator", lineno, value_col);
                    }
            } else {
                throw ParseError("unknown tag '" + tag + "'", lineno, value_col);
            }
        } else if (key == "fiber") {
            if (!in.ring) throw ParseError("ring not declared", lineno, 1);
            std::size_t eq = value.find('=');
            if (eq == std::string::npos)
                throw ParseError("expected 'fiber: <value> = <factor> ; ...'", lineno, value_col);
            Rational y;
            try {
                y = rational_from_string(strip(value.substr(0, eq)));
            } catch (const std::exception&) {
                throw ParseError("invalid fiber value", lineno, value_col);
            }
            std::vector<QPoly> hints;
            int col = value_col + static_cast<int>(eq) + 1;
            for (auto& part : split(value.substr(eq + 1), ';')) {
                hints.push_back(parse_polynomial(part, in.ring, lineno, col));
                col += static_cast<int>(part.size()) + 1;
            }
            if (hints.empty())
                throw ParseError("fiber hint without factors", lineno, value_col);
            in.fiber_hints[y] = std::move(hints);
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, 1);
        }
    }

    if (in.is_monomial() || in.section6) return in;
    if (!in.ring) throw ParseError("ring not declared", std::max(lineno, 1), 1);
    if (in.factors.empty()) throw ParseError("no factor lines", std::max(lineno, 1), 1);
    if (!in.weights.empty() && in.weights.size() != in.ring->size())
        throw ParseError("one weight per ring variable required", std::max(lineno, 1), 1);
    return in;
}

CurveSpec to_curve_spec(const ParsedInput& in) {
    if (in.is_monomial())
        throw std::domain_error("monomial curve file has no plane-curve presentation");
    if (in.section6) throw std::domain_error("section6 tag describes a family, not a curve");
    CurveSpec spec = make_curve_spec(in.factors);
    if (!in.weights.empty()) spec.weights = in.weights;
    spec.tame_tag = in.tame;
    return spec;
}

FamilySpec to_family_spec(const ParsedInput& in) {
    if (in.section6) return section6_family();
    if (in.is_monomial()) throw std::domain_error("monomial curve file is not a family");
    FamilySpec fam;
    fam.kind = FamilySpec::Kind::Plane;
    fam.f = QPoly::constant(in.ring, 1);
    for (const auto& g : in.factors) fam.f *= g;
    if (!in.weights.empty()) fam.weights = in.weights;
    fam.tame_tag = in.tame;
    fam.fiber_hints = in.fiber_hints;
    return fam;
}

}  // namespace curveh1
