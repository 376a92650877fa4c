#include "orbita/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace orbita {

std::string Diagnostic::str() const {
    std::ostringstream os;
    os << (severity == Severity::Error ? "error" : "warning") << " at " << line << ":" << column
       << ": " << message;
    if (!excerpt.empty()) os << "\n  | " << excerpt;
    return os.str();
}

const Definition* DslDocument::find(const std::string& name) const {
    for (const auto& d : definitions)
        if (d.name == name) return &d;
    return nullptr;
}

const Morphism* DslDocument::find_map(const std::string& name) const {
    const Definition* d = find(name);
    return d && d->kind == Definition::Kind::Map ? &*d->map : nullptr;
}

const EllipticCurve* DslDocument::find_curve(const std::string& name) const {
    const Definition* d = find(name);
    return d && d->kind == Definition::Kind::Curve ? &*d->curve : nullptr;
}

const ProjPoint* DslDocument::find_point(const std::string& name) const {
    const Definition* d = find(name);
    return d && d->kind == Definition::Kind::Point ? &*d->point : nullptr;
}

namespace {

struct Token {
    enum class Kind { End, Ident, Int, Punct };
    Kind kind = Kind::End;
    std::string text;
    size_t line = 1, column = 1;
};

struct ParseError {
    std::string message;
    size_t line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        tok_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                take_char();
            tok_.kind = Token::Kind::Ident;
            tok_.text = src_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                take_char();
            tok_.kind = Token::Kind::Int;
            tok_.text = src_.substr(start, pos_ - start);
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            tok_.kind = Token::Kind::Punct;
            tok_.text = "->";
            take_char();
            take_char();
        } else {
            tok_.kind = Token::Kind::Punct;
            tok_.text = std::string(1, c);
            take_char();
        }
    }

    void take_char() {
        ++pos_;
        ++col_;
    }

    const std::string& src_;
    size_t pos_ = 0, line_ = 1, col_ = 1;
    Token tok_;
};

// A parsed monomial before homogeneity validation.
struct RawTerm {
    BigInt coeff;
    std::map<unsigned, unsigned> vars; // variable index -> exponent
    size_t line, column;
    unsigned total_degree() const {
        unsigned d = 0;
        for (auto& [v, e] : vars) d += e;
        return d;
    }
};

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    DslDocument parse_document() {
        DslDocument doc;
        while (lex_.peek().kind != Token::Kind::End) {
            Token kw = expect_ident("definition keyword");
            if (kw.text == "map")
                doc.definitions.push_back(parse_mapdef(doc));
            else if (kw.text == "curve")
                doc.definitions.push_back(parse_curvedef(doc));
            else if (kw.text == "point")
                doc.definitions.push_back(parse_pointdef(doc));
            else
                fail("expected 'map', 'curve' or 'point', got '" + kw.text + "'", kw);
        }
        return doc;
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& at) {
        throw ParseError{msg, at.line, at.column};
    }

    Token expect_ident(const std::string& what) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Ident) fail("expected " + what, t);
        return t;
    }

    Token expect_punct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Punct || t.text != p) fail("expected '" + p + "'", t);
        return t;
    }

    BigInt expect_int(bool allow_sign) {
        Token t = lex_.take();
        bool neg = false;
        if (allow_sign && t.kind == Token::Kind::Punct && (t.text == "-" || t.text == "+")) {
            neg = t.text == "-";
            t = lex_.take();
        }
        if (t.kind != Token::Kind::Int) fail("expected integer", t);
        BigInt v(t.text);
        return neg ? BigInt(-v) : v;
    }

    BigRat expect_rat() {
        BigInt num = expect_int(true);
        BigInt den = 1;
        if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "/") {
            lex_.take();
            den = expect_int(false);
            if (den == 0) fail("zero denominator", lex_.peek());
        }
        BigRat r(num, den);
        r.canonicalize();
        return r;
    }

    std::string fresh_name(const DslDocument& doc) {
        Token t = expect_ident("name");
        if (doc.find(t.text)) fail("duplicate definition of '" + t.text + "'", t);
        return t.text;
    }

    unsigned parse_proj_space() {
        Token t = expect_ident("projective space (P<n>)");
        if (t.text.size() < 2 || t.text[0] != 'P' ||
            !std::all_of(t.text.begin() + 1, t.text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail("expected projective space like 'P1'", t);
        return static_cast<unsigned>(std::stoul(t.text.substr(1)));
    }

    // factor := VAR ["^" NAT]
    void parse_factor(RawTerm& term) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::Ident || t.text.size() < 2 || t.text[0] != 'x' ||
            !std::all_of(t.text.begin() + 1, t.text.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail("expected variable like 'x0'", t);
        unsigned var = static_cast<unsigned>(std::stoul(t.text.substr(1)));
        unsigned exp = 1;
        if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "^") {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::Int) fail("expected exponent", e);
            exp = static_cast<unsigned>(std::stoul(e.text));
        }
        term.vars[var] += exp;
    }

    // term := [ INT ["*"] ] factor ("*" factor)* | INT
    RawTerm parse_term(bool negated) {
        RawTerm term;
        term.line = lex_.peek().line;
        term.column = lex_.peek().column;
        term.coeff = 1;
        bool saw_factor = false;
        if (lex_.peek().kind == Token::Kind::Int) {
            term.coeff = BigInt(lex_.take().text);
            if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "*") {
                lex_.take();
                parse_factor(term);
                saw_factor = true;
            } else if (lex_.peek().kind == Token::Kind::Ident && lex_.peek().text[0] == 'x') {
                parse_factor(term);
                saw_factor = true;
            }
        } else {
            parse_factor(term);
            saw_factor = true;
        }
        while (saw_factor && lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "*") {
            lex_.take();
            parse_factor(term);
        }
        if (negated) term.coeff = -term.coeff;
        return term;
    }

    // poly := ["-"] term (("+"|"-") term)*
    std::vector<RawTerm> parse_poly() {
        std::vector<RawTerm> terms;
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == "-") {
            lex_.take();
            neg = true;
        }
        terms.push_back(parse_term(neg));
        while (lex_.peek().kind == Token::Kind::Punct &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            bool minus = lex_.take().text == "-";
            terms.push_back(parse_term(minus));
        }
        return terms;
    }

    Definition parse_mapdef(const DslDocument& doc) {
        std::string name = fresh_name(doc);
        Token at = lex_.peek();
        expect_punct(":");
        unsigned n_from = parse_proj_space();
        expect_punct("->");
        unsigned n_to = parse_proj_space();
        if (n_from != n_to) fail("map must be a self-map of one projective space", at);
        expect_punct("=");
        expect_punct("[");
        std::vector<std::vector<RawTerm>> polys;
        std::vector<Token> poly_pos;
        poly_pos.push_back(lex_.peek());
        polys.push_back(parse_poly());
        while (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == ",") {
            lex_.take();
            poly_pos.push_back(lex_.peek());
            polys.push_back(parse_poly());
        }
        expect_punct("]");

        const unsigned nvars = n_from + 1;
        if (polys.size() != nvars)
            fail("map of P" + std::to_string(n_from) + " needs " + std::to_string(nvars) +
                     " components, got " + std::to_string(polys.size()),
                 at);
        // homogeneity and common degree
        int common_degree = -1;
        std::vector<int> degrees(polys.size(), -1);
        for (size_t i = 0; i < polys.size(); ++i) {
            for (const RawTerm& t : polys[i]) {
                if (t.coeff == 0) continue;
                for (auto& [v, e] : t.vars)
                    if (v >= nvars)
                        fail("variable x" + std::to_string(v) + " out of range for P" +
                                 std::to_string(n_from),
                             Token{Token::Kind::Ident, "", t.line, t.column});
                int deg = static_cast<int>(t.total_degree());
                if (degrees[i] < 0)
                    degrees[i] = deg;
                else if (degrees[i] != deg)
                    fail("non-homogeneous polynomial in component " + std::to_string(i),
                         Token{Token::Kind::Ident, "", t.line, t.column});
            }
            if (degrees[i] >= 0) {
                if (common_degree < 0)
                    common_degree = degrees[i];
                else if (common_degree != degrees[i])
                    fail("degree mismatch among components", poly_pos[i]);
            }
        }
        if (common_degree < 0) fail("map components are all zero", at);

        std::vector<HomogForm> forms;
        for (const auto& poly : polys) {
            HomogForm f(nvars, common_degree);
            for (const RawTerm& t : poly) {
                if (t.coeff == 0) continue;
                HomogForm::Exponents e(nvars, 0);
                for (auto& [v, x] : t.vars) e[v] = x;
                f.add_term(e, t.coeff);
            }
            forms.push_back(std::move(f));
        }
        Definition def;
        def.kind = Definition::Kind::Map;
        def.name = std::move(name);
        try {
            def.map = Morphism::create(std::move(forms));
        } catch (const domain_error& e) {
            fail(e.what(), at);
        }
        return def;
    }

    Definition parse_curvedef(const DslDocument& doc) {
        std::string name = fresh_name(doc);
        Token at = lex_.peek();
        expect_punct("=");
        expect_punct("[");
        BigInt a = expect_int(true);
        expect_punct(",");
        BigInt b = expect_int(true);
        expect_punct("]");
        Definition def;
        def.kind = Definition::Kind::Curve;
        def.name = std::move(name);
        try {
            def.curve = EllipticCurve::create(std::move(a), std::move(b));
        } catch (const domain_error& e) {
            fail(e.what(), at);
        }
        return def;
    }

    Definition parse_pointdef(const DslDocument& doc) {
        std::string name = fresh_name(doc);
        Token at = lex_.peek();
        expect_punct("=");
        expect_punct("[");
        std::vector<BigRat> coords{expect_rat()};
        while (lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == ":") {
            lex_.take();
            coords.push_back(expect_rat());
        }
        expect_punct("]");
        if (coords.size() < 2) fail("point needs at least two coordinates", at);
        Definition def;
        def.kind = Definition::Kind::Point;
        def.name = std::move(name);
        try {
            def.point = ProjPoint::from_rationals(coords);
        } catch (const std::invalid_argument& e) {
            fail(e.what(), at);
        }
        return def;
    }

    Lexer lex_;
};

std::string source_line(const std::string& src, size_t line) {
    size_t cur = 1, start = 0;
    while (cur < line) {
        size_t nl = src.find('\n', start);
        if (nl == std::string::npos) return "";
        start = nl + 1;
        ++cur;
    }
    size_t end = src.find('\n', start);
    return src.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

} // namespace

ParseResult parse(const std::string& source) {
    ParseResult res;
    try {
        Parser p(source);
        res.document = p.parse_document();
    } catch (const ParseError& e) {
        Diagnostic d;
        d.message = e.message;
        d.line = e.line;
        d.column = e.column;
        d.excerpt = source_line(source, e.line);
        res.diagnostics.push_back(std::move(d));
    }
    return res;
}

std::string print(const HomogForm& f) {
    if (f.is_zero()) return "0";
    // descending power of the first variable reads naturally
    std::vector<std::pair<HomogForm::Exponents, BigInt>> terms(f.terms().begin(),
                                                               f.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        BigInt mag = ::abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](unsigned x) { return x > 0; });
        bool need_coeff = mag != 1 || !any_var;
        if (need_coeff) os << mag.get_str();
        bool sep = need_coeff;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (sep) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            sep = true;
        }
    }
    return os.str();
}

std::string print(const Morphism& f) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < f.forms().size(); ++i) {
        if (i) os << ", ";
        os << print(f.forms()[i]);
    }
    os << "]";
    return os.str();
}

std::string print(const DslDocument& doc) {
    std::ostringstream os;
    for (const auto& d : doc.definitions) {
        switch (d.kind) {
        case Definition::Kind::Map:
            os << "map " << d.name << " : P" << d.map->dim() << " -> P" << d.map->dim() << " = "
               << print(*d.map) << "\n";
            break;
        case Definition::Kind::Curve:
            os << "curve " << d.name << " = [" << d.curve->a.get_str() << ", "
               << d.curve->b.get_str() << "]\n";
            break;
        case Definition::Kind::Point: {
            os << "point " << d.name << " = [";
            const auto& c = d.point->coords();
            for (size_t i = 0; i < c.size(); ++i) {
                if (i) os << " : ";
                os << c[i].get_str();
            }
            os << "]\n";
            break;
        }
        }
    }
    return os.str();
}

} // namespace orbita
