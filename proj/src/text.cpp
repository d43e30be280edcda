#include "skewgb/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace skewgb {

// ---- rendering ------------------------------------------------------------

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

namespace {

// One c*t^k monomial of a ring element.
std::string ring_term(const std::string& var, const Rational& c, int k) {
    std::string s;
    if (k == 0) return to_string(c);
    if (c == -1)
        s = "-";
    else if (c != 1)
        s = to_string(c) + "*";
    s += var;
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

std::string render_ring(const RingSpec& spec, const RingElem& e) {
    if (e.is_zero()) return "0";
    if (spec.kind == RingKind::Rationals || e.is_constant()) return to_string(e.constant_value());
    std::string s;
    for (int k = e.degree(); k >= 0; --k) {
        Rational c = e.coeff(k);
        if (c == 0) continue;
        if (s.empty()) {
            s = ring_term(spec.base_var, c, k);
        } else if (is_negative(c)) {
            s += " - " + ring_term(spec.base_var, -c, k);
        } else {
            s += " + " + ring_term(spec.base_var, c, k);
        }
    }
    return s;
}

std::string render_mono(const AlgebraSpec& spec, const Exponent& e) {
    std::string s;
    for (int i = 0; i < spec.nvars(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += spec.vars[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string render_modmon(const AlgebraSpec& spec, const ModMonomial& m) {
    std::string s = render_mono(spec, m.exp);
    if (!s.empty()) s += "*";
    return s + "e" + std::to_string(m.index);
}

namespace {

// Shared term renderer. `tail` is the monomial/basis part ("" for a bare
// coefficient). Returns the pieces the sum printer joins.
struct TermText {
    bool negative;
    std::string body;  // without the sign
};

TermText term_text(const RingSpec& rs, const RingElem& c, const std::string& tail) {
    // Multi-term ring coefficients are parenthesized; the sign of a
    // single-term coefficient is pulled out in front.
    bool multi = false;
    int nonzero = 0;
    for (int k = 0; k <= c.degree(); ++k)
        if (c.coeff(k) != 0) ++nonzero;
    multi = nonzero > 1;
    if (multi) {
        bool neg = is_negative(c.leading_coeff());
        std::string inner = render_ring(rs, neg ? -c : c);
        std::string body = "(" + inner + ")";
        if (!tail.empty()) body += "*" + tail;
        return {neg, body};
    }
    // single term: c = q * t^k
    int k = c.degree();
    Rational q = c.coeff(k);
    bool neg = is_negative(q);
    if (neg) q = -q;
    std::string coeff;
    if (k > 0) {
        coeff = ring_term(rs.base_var, q, k);
    } else if (q != 1 || tail.empty()) {
        coeff = to_string(q);
    }
    std::string body = coeff;
    if (!tail.empty()) {
        if (!body.empty()) body += "*";
        body += tail;
    }
    return {neg, body};
}

std::string join_terms(std::vector<TermText> terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            s += (terms[i].negative ? "-" : "") + terms[i].body;
        else
            s += (terms[i].negative ? " - " : " + ") + terms[i].body;
    }
    return s;
}

}  // namespace

std::string render_poly(const SkewPoly& f, const OrderSpec& order) {
    if (f.is_zero()) return "0";
    const AlgebraSpec& spec = *f.spec();
    std::vector<const Exponent*> keys;
    for (const auto& [e, c] : f.terms()) keys.push_back(&e);
    std::sort(keys.begin(), keys.end(), [&](const Exponent* a, const Exponent* b) {
        return cmp_mon(order, *a, *b) == Cmp::GT;
    });
    std::vector<TermText> terms;
    for (const Exponent* e : keys)
        terms.push_back(term_text(spec.base, f.terms().at(*e), render_mono(spec, *e)));
    return join_terms(std::move(terms));
}

std::string render_vector(const ModVector& f, const OrderSpec& order) {
    if (f.is_zero()) return "0";
    const AlgebraSpec& spec = *f.spec();
    std::vector<const ModMonomial*> keys;
    for (const auto& [m, c] : f.terms()) keys.push_back(&m);
    std::sort(keys.begin(), keys.end(), [&](const ModMonomial* a, const ModMonomial* b) {
        return cmp_modmon(order, *a, *b) == Cmp::GT;
    });
    std::vector<TermText> terms;
    for (const ModMonomial* m : keys)
        terms.push_back(term_text(spec.base, f.terms().at(*m), render_modmon(spec, *m)));
    return join_terms(std::move(terms));
}

std::string render_column(const CoeffColumn& col, const OrderSpec& order) {
    std::string s = "(";
    for (size_t i = 0; i < col.size(); ++i) {
        if (i) s += ", ";
        s += render_poly(col[i], order);
    }
    return s + ")";
}

// ---- expression parsing ----------------------------------------------------

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) advance();
        if (pos == start) fail("expected a number");
        return Int(text.substr(start, pos - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            advance();
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            advance();
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }
};

Rational lex_rational(Lexer& lx) {
    Int num = lx.integer();
    if (lx.accept('/')) {
        Int den = lx.integer();
        if (den == 0) lx.fail("zero denominator");
        return Rational(num, den);
    }
    return Rational(num);
}

int lex_power(Lexer& lx) {
    if (!lx.accept('^')) return 1;
    Int p = lx.integer();
    if (p < 0 || p > 1000000) lx.fail("exponent out of range");
    return static_cast<int>(p);
}

std::optional<int> basis_index(const std::string& name) {
    if (name.size() < 2 || name.size() > 8 || name[0] != 'e') return std::nullopt;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    return std::stoi(name.substr(1));
}

// Parenthesized base-ring sum: signed products of rationals and base-var
// powers, e.g. (x1 - 2) or (3/4*x1^2 + 1).
RingElem lex_ring_sum(Lexer& lx, const SpecHandle& spec) {
    RingElem acc = RingElem::zero(spec->base.kind);
    bool negative = lx.accept('-');
    if (!negative) lx.accept('+');
    while (true) {
        RingElem term = RingElem::one(spec->base.kind);
        bool first = true;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term = term * RingElem::constant(spec->base.kind, lex_rational(lx));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lx.ident();
                if (spec->base.kind != RingKind::Polynomials || name != spec->base.base_var)
                    lx.fail("only the base variable may appear inside parentheses");
                term = term * RingElem::variable_power(lex_power(lx));
            } else if (first) {
                lx.fail("expected a coefficient term");
            } else {
                lx.fail("expected a factor");
            }
            first = false;
            if (!lx.accept('*')) break;
        }
        acc = negative ? acc - term : acc + term;
        if (lx.accept(')')) return acc;
        if (lx.accept('+'))
            negative = false;
        else if (lx.accept('-'))
            negative = true;
        else
            lx.fail("expected + or - inside parentheses");
    }
}

// One signed term: product of factors ending in e<k> (vector mode) or plain
// (polynomial mode, basis = 0). Evaluated left to right through the engine.
std::pair<SkewPoly, int> lex_term(Lexer& lx, const SpecHandle& spec, int rank, bool vector_mode) {
    SkewPoly acc = SkewPoly::one(spec);
    int basis = 0;
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == '(') {
            lx.advance();
            acc = poly_mul(acc, SkewPoly::constant(spec, lex_ring_sum(lx, spec)));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q = lex_rational(lx);
            acc = poly_mul(acc, SkewPoly::constant(spec, RingElem::constant(spec->base.kind, q)));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lx.ident();
            if (auto k = basis_index(name)) {
                if (!vector_mode) lx.fail("basis symbol " + name + " in a scalar expression");
                if (*k < 1 || *k > rank)
                    lx.fail("basis index " + name + " exceeds the module rank " + std::to_string(rank));
                basis = *k;
                break;  // basis symbol ends the term
            }
            int power = 0;
            auto it = std::find(spec->vars.begin(), spec->vars.end(), name);
            if (it != spec->vars.end()) {
                power = lex_power(lx);
                Exponent e(spec->nvars(), 0);
                e[it - spec->vars.begin()] = power;
                acc = poly_mul(acc, SkewPoly::monomial(spec, e));
            } else if (spec->base.kind == RingKind::Polynomials && name == spec->base.base_var) {
                power = lex_power(lx);
                acc = poly_mul(acc, SkewPoly::constant(spec, RingElem::variable_power(power)));
            } else {
                lx.fail("unknown identifier " + name);
            }
        } else if (first) {
            lx.fail("expected a term");
        } else {
            lx.fail("expected a factor");
        }
        first = false;
        if (!lx.accept('*')) break;
    }
    if (vector_mode && basis == 0) lx.fail("term is missing its basis symbol e<k>");
    return {acc, basis};
}

ModVector parse_vector_impl(Lexer& lx, const SpecHandle& spec, int rank) {
    ModVector out = ModVector::zero(spec, rank);
    bool negative = false;
    if (lx.accept('-'))
        negative = true;
    else
        lx.accept('+');
    while (true) {
        auto [poly, basis] = lex_term(lx, spec, rank, true);
        if (negative) poly = poly_neg(poly);
        for (const auto& [e, c] : poly.terms()) out.add_term(ModMonomial{e, basis}, c);
        if (lx.eof()) break;
        if (lx.accept('+'))
            negative = false;
        else if (lx.accept('-'))
            negative = true;
        else
            lx.fail("expected + or - between terms");
    }
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    Lexer lx(text);
    bool neg = lx.accept('-');
    Rational q = lex_rational(lx);
    if (!lx.eof()) lx.fail("trailing characters after rational");
    return neg ? -q : q;
}

ModVector parse_vector(const std::string& text, const SpecHandle& spec, int rank) {
    Lexer lx(text);
    if (lx.eof()) throw ParseError("empty vector expression");
    // "0" parses to the zero vector
    if (lx.peek() == '0') {
        size_t save = lx.pos;
        lx.advance();
        if (lx.eof()) return ModVector::zero(spec, rank);
        lx.pos = save;
    }
    return parse_vector_impl(lx, spec, rank);
}

// ---- presentation files -----------------------------------------------------

namespace {

struct IniSection {
    std::string header;
    std::map<std::string, std::string> entries;
    int line = 0;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<IniSection> read_sections(const std::string& text) {
    std::vector<IniSection> sections;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("unterminated section header", lineno, 1);
            sections.push_back({trim(line.substr(1, line.size() - 2)), {}, lineno});
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno, 1);
        if (sections.empty()) throw ParseError("entry before any section header", lineno, 1);
        sections.back().entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return sections;
}

// Ring-element expression over the base variable only (delta values,
// relation constants): reuses the term lexer with a one-variable view.
RingElem parse_ring_expr(const std::string& text, const RingSpec& rs, int lineno) {
    if (trim(text) == "0") return RingElem::zero(rs.kind);
    auto scratch = std::make_shared<AlgebraSpec>();
    scratch->base = rs;
    try {
        Lexer lx(text);
        SkewPoly p(scratch);
        bool negative = lx.accept('-');
        if (!negative) lx.accept('+');
        SpecHandle h = scratch;
        while (true) {
            auto [poly, basis] = lex_term(lx, h, 1, false);
            (void)basis;
            if (negative) poly = poly_neg(poly);
            p.add(poly);
            if (lx.eof()) break;
            if (lx.accept('+'))
                negative = false;
            else if (lx.accept('-'))
                negative = true;
            else
                lx.fail("expected + or - between terms");
        }
        if (p.is_zero()) return RingElem::zero(rs.kind);
        return p.terms().begin()->second;
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " [line " + std::to_string(lineno) + "]");
    }
}

// Degree-<=1 expression in the extension variables with base-ring
// coefficients.
LinearTail parse_tail(const std::string& text, const SpecHandle& spec, int lineno) {
    LinearTail tail;
    tail.constant = spec->ring_zero();
    tail.linear.assign(spec->nvars(), spec->ring_zero());
    if (trim(text) == "0") return tail;
    try {
        Lexer lx(text);
        SkewPoly p(spec);
        bool negative = lx.accept('-');
        if (!negative) lx.accept('+');
        while (true) {
            auto [poly, basis] = lex_term(lx, spec, 1, false);
            (void)basis;
            if (negative) poly = poly_neg(poly);
            p.add(poly);
            if (lx.eof()) break;
            if (lx.accept('+'))
                negative = false;
            else if (lx.accept('-'))
                negative = true;
            else
                lx.fail("expected + or - between terms");
        }
        for (const auto& [e, c] : p.terms()) {
            int deg = exp_degree(e);
            if (deg == 0) {
                tail.constant = c;
            } else if (deg == 1) {
                for (int i = 0; i < spec->nvars(); ++i)
                    if (e[i] == 1) tail.linear[i] = c;
            } else {
                throw ParseError("relation tail has degree > 1", lineno, 1);
            }
        }
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " [line " + std::to_string(lineno) + "]");
    }
    return tail;
}

std::shared_ptr<AlgebraSpec> parse_algebra_impl(const std::string& text) {
    auto spec = std::make_shared<AlgebraSpec>();
    auto sections = read_sections(text);

    // [ring] comes first so variable sections can refer to the base.
    bool have_ring = false, have_vars = false;
    for (const auto& sec : sections) {
        if (sec.header == "ring") {
            auto it = sec.entries.find("base");
            if (it == sec.entries.end()) throw ParseError("[ring] is missing base =", sec.line, 1);
            const std::string& v = it->second;
            if (v == "QQ") {
                spec->base.kind = RingKind::Rationals;
            } else if (v.rfind("QQ[", 0) == 0 && v.back() == ']') {
                spec->base.kind = RingKind::Polynomials;
                spec->base.base_var = trim(v.substr(3, v.size() - 4));
                if (spec->base.base_var.empty())
                    throw ParseError("empty base variable in [ring]", sec.line, 1);
            } else {
                throw ParseError("base must be QQ or QQ[<var>]", sec.line, 1);
            }
            have_ring = true;
        } else if (sec.header == "variables") {
            auto it = sec.entries.find("names");
            if (it == sec.entries.end())
                throw ParseError("[variables] is missing names =", sec.line, 1);
            std::istringstream vs(it->second);
            std::string name;
            while (vs >> name) {
                if (!name.empty() && name.back() == ',') name.pop_back();
                if (!name.empty()) spec->vars.push_back(name);
            }
            if (spec->vars.empty()) throw ParseError("no variables listed", sec.line, 1);
            have_vars = true;
        }
    }
    if (!have_ring) throw ParseError("missing [ring] section");
    if (!have_vars) throw ParseError("missing [variables] section");
    for (const auto& v : spec->vars)
        if (basis_index(v)) throw ParseError("variable name " + v + " collides with basis symbols");

    const int n = spec->nvars();
    if (spec->base.kind == RingKind::Polynomials) {
        spec->sigma.assign(n, AffineMap{});
        spec->delta.assign(n, RingElem::zero(RingKind::Polynomials));
    }

    auto var_pos = [&](const std::string& name, int line) {
        auto it = std::find(spec->vars.begin(), spec->vars.end(), name);
        if (it == spec->vars.end()) throw ParseError("unknown variable " + name, line, 1);
        return static_cast<int>(it - spec->vars.begin());
    };

    // sigma/delta/flags first, relations second: relation tails evaluate
    // through the engine, which must already see the sigma data.
    bool quasi_set = false, bij_set = false;
    for (const auto& sec : sections) {
        if (sec.header == "ring" || sec.header == "variables") continue;
        if (sec.header.rfind("relation.", 0) == 0) continue;
        if (sec.header.rfind("sigma.", 0) == 0) {
            if (spec->base.kind != RingKind::Polynomials)
                throw ParseError("[sigma.*] requires a QQ[t] base", sec.line, 1);
            int i = var_pos(sec.header.substr(6), sec.line);
            for (const auto& [k, v] : sec.entries) {
                if (k == "a")
                    spec->sigma[i].a = parse_rational(v);
                else if (k == "b")
                    spec->sigma[i].b = parse_rational(v);
                else
                    throw ParseError("unknown key " + k + " in [" + sec.header + "]", sec.line, 1);
            }
        } else if (sec.header.rfind("delta.", 0) == 0) {
            if (spec->base.kind != RingKind::Polynomials)
                throw ParseError("[delta.*] requires a QQ[t] base", sec.line, 1);
            int i = var_pos(sec.header.substr(6), sec.line);
            auto it = sec.entries.find("d");
            if (it == sec.entries.end())
                throw ParseError("[" + sec.header + "] is missing d =", sec.line, 1);
            spec->delta[i] = parse_ring_expr(it->second, spec->base, sec.line);
        } else if (sec.header == "flags") {
            for (const auto& [k, v] : sec.entries) {
                bool val = (v == "true" || v == "1" || v == "yes");
                if (!val && !(v == "false" || v == "0" || v == "no"))
                    throw ParseError("flag values must be true or false", sec.line, 1);
                if (k == "quasi_commutative") {
                    spec->quasi_commutative = val;
                    quasi_set = true;
                } else if (k == "bijective") {
                    spec->bijective = val;
                    bij_set = true;
                } else {
                    throw ParseError("unknown flag " + k, sec.line, 1);
                }
            }
        } else {
            throw ParseError("unknown section [" + sec.header + "]", sec.line, 1);
        }
    }
    for (const auto& sec : sections) {
        if (sec.header.rfind("relation.", 0) != 0) continue;
        std::string rest = sec.header.substr(9);
        size_t dot = rest.find('.');
        if (dot == std::string::npos)
            throw ParseError("relation header must be [relation.<xj>.<xi>]", sec.line, 1);
        int j = var_pos(rest.substr(0, dot), sec.line);
        int i = var_pos(rest.substr(dot + 1), sec.line);
        if (i >= j)
            throw ParseError("relation [relation.<xj>.<xi>] requires xi to precede xj", sec.line, 1);
        PairRelation rel;
        rel.c = spec->ring_one();
        rel.tail.constant = spec->ring_zero();
        rel.tail.linear.assign(n, spec->ring_zero());
        for (const auto& [k, v] : sec.entries) {
            if (k == "c")
                rel.c = parse_ring_expr(v, spec->base, sec.line);
            else if (k == "tail")
                rel.tail = parse_tail(v, spec, sec.line);
            else
                throw ParseError("unknown key " + k + " in [" + sec.header + "]", sec.line, 1);
        }
        spec->relations[{i, j}] = std::move(rel);
    }

    // Defaults inferred from the data when the flags are not spelled out.
    if (!quasi_set) {
        bool qc = true;
        for (const auto& d : spec->delta)
            if (!d.is_zero()) qc = false;
        for (const auto& [ij, rel] : spec->relations)
            if (!rel.tail.is_zero()) qc = false;
        spec->quasi_commutative = qc;
    }
    if (!bij_set) {
        bool bij = true;
        for (const auto& m : spec->sigma)
            if (m.a == 0) bij = false;
        for (const auto& [ij, rel] : spec->relations)
            if (!rel.c.is_unit()) bij = false;
        spec->bijective = bij;
    }

    auto diags = validate_spec(spec);
    if (!diags.empty()) {
        std::string msg = "invalid algebra presentation:";
        for (const auto& d : diags) msg += "\n  - " + d;
        throw ParseError(msg);
    }
    return spec;
}

}  // namespace

SpecHandle parse_algebra(const std::string& text) {
    auto spec = parse_algebra_impl(text);
    spec->name = "presentation";
    return spec;
}

SpecHandle load_algebra(const std::string& source) {
    if (source.rfind("preset:", 0) == 0) {
        std::string body = source.substr(7);
        size_t open = body.find('(');
        if (open == std::string::npos || body.back() != ')')
            throw ParseError("preset syntax is preset:<name>(<args>)");
        std::string name = body.substr(0, open);
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        std::vector<Rational> args;
        std::string argstr = body.substr(open + 1, body.size() - open - 2);
        std::istringstream as(argstr);
        std::string piece;
        while (std::getline(as, piece, ',')) {
            piece = trim(piece);
            if (!piece.empty()) args.push_back(parse_rational(piece));
        }
        auto numeric_suffix = [&](const std::string& prefix) -> std::optional<int> {
            if (name.rfind(prefix, 0) != 0) return std::nullopt;
            std::string digits = name.substr(prefix.size());
            if (digits.empty() || digits.size() > 6) return std::nullopt;
            for (char c : digits)
                if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            return std::stoi(digits);
        };
        try {
            if (name == "sh") {
                if (args.size() != 1) throw ContractViolation("sh expects one parameter");
                return preset_shift(args[0]);
            }
            if (auto n = numeric_suffix("h")) {
                if (args.size() != 1) throw ContractViolation("h_n expects one parameter");
                return preset_heisenberg(*n, args[0]);
            }
            if (auto n = numeric_suffix("o")) return preset_multiplicative_weyl(*n, args);
            if (auto n = numeric_suffix("a")) return preset_additive_weyl(*n, args);
        } catch (const ContractViolation& e) {
            throw ParseError(std::string("bad preset parameters: ") + e.what());
        }
        throw ParseError("unknown preset " + name +
                         " (available: h<n>(q), o<n>(lambdas...), a<n>(q1..qn), sh(h))");
    }
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open algebra file " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    auto spec = parse_algebra_impl(buf.str());
    spec->name = source;
    return spec;
}

}  // namespace skewgb
