#include "weylbkk/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace weylbkk::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// printing

std::string to_string(const Scalar& s) { return s.to_string(); }

namespace {

// Shared printer over the term map. gen_name maps a 0-based variable slot to
// its display name.
template <typename NameFn>
std::string print_terms(const TermMap& terms, const RingDescriptor& ring, NameFn gen_name) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [I, c] = *it;
        bool negative_int = ring.kind == RingDescriptor::Kind::Integers && c.integer_value() < 0;
        if (first) {
            if (negative_int) os << "-";
            first = false;
        } else {
            os << (negative_int ? " - " : " + ");
        }
        Scalar mag = negative_int ? -c : c;
        bool is_const = total(I) == 0;
        if (is_const || !mag.is_one()) {
            os << mag.to_string();
            if (!is_const) os << "*";
        }
        bool first_var = true;
        for (size_t v = 0; v < I.size(); ++v) {
            if (I[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << gen_name(v);
            if (I[v] > 1) os << "^" << I[v];
        }
    }
    return os.str();
}

std::string weyl_gen_name(unsigned n, size_t v) {
    return v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
}

} // namespace

std::string to_string(const WeylElement& e) {
    unsigned n = e.pairs();
    return print_terms(e.terms(), e.ring(), [n](size_t v) { return weyl_gen_name(n, v); });
}

std::string to_string(const Poly& q, char var) {
    return print_terms(q.terms(), q.ring(), [var](size_t v) { return std::string(1, var) + std::to_string(v + 1); });
}

std::string to_string(const SymplectoMap& s) {
    std::ostringstream os;
    for (unsigned i = 0; i < 2 * s.n; ++i) {
        if (i) os << "; ";
        os << "z" << (i + 1) << " -> " << to_string(s.images[i]);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Token {
    enum Kind { Int, Var, T, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    long value = 0;    // Int
    char letter = 0;   // Var letter
    unsigned index = 0; // Var subscript
    size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.pos = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
        case '+': tok_.kind = Token::Plus; ++pos_; return;
        case '-': tok_.kind = Token::Minus; ++pos_; return;
        case '*': tok_.kind = Token::Star; ++pos_; return;
        case '/': tok_.kind = Token::Slash; ++pos_; return;
        case '^': tok_.kind = Token::Caret; ++pos_; return;
        case '(': tok_.kind = Token::LParen; ++pos_; return;
        case ')': tok_.kind = Token::RParen; ++pos_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = 0;
            constexpr long kMax = std::numeric_limits<long>::max();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                long d = text_[pos_] - '0';
                if (v > (kMax - d) / 10)
                    fail(Errc::ParseError, "integer literal overflow at position " + std::to_string(tok_.pos));
                v = v * 10 + d;
                ++pos_;
            }
            tok_.kind = Token::Int;
            tok_.value = v;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (c == 't' && (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
                tok_.kind = Token::T;
                return;
            }
            unsigned idx = 0;
            bool any = false;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                idx = idx * 10 + static_cast<unsigned>(text_[pos_] - '0');
                ++pos_;
                any = true;
            }
            if (!any) fail(Errc::ParseError, std::string("expected index after '") + c + "' at position " +
                                                 std::to_string(tok_.pos));
            tok_.kind = Token::Var;
            tok_.letter = c;
            tok_.index = idx;
            return;
        }
        fail(Errc::ParseError, std::string("unexpected character '") + c + "' at position " + std::to_string(pos_));
    }

    std::string_view text_;
    size_t pos_ = 0;
    Token tok_;
};

// Element-type adaptor so one parser serves both algebras.
struct WeylOps {
    unsigned n;
    RingDescriptor ring;
    using Elem = WeylElement;
    Elem from_scalar(const Scalar& c) const { return WeylElement::constant(n, c); }
    Elem variable(char letter, unsigned index, size_t pos) const {
        if (letter != 'x' && letter != 'y')
            fail(Errc::ParseError, std::string("unknown generator letter '") + letter + "' at position " +
                                       std::to_string(pos));
        if (index < 1 || index > n)
            fail(Errc::IndexOutOfRange, std::string(1, letter) + std::to_string(index) + " with n=" +
                                            std::to_string(n));
        return WeylElement::generator(n, ring, letter == 'x' ? index : n + index);
    }
    Elem pow(const Elem& e, unsigned long m) const { return weylbkk::pow(e, m); }
    bool is_constant(const Elem& e) const { return e.is_constant(); }
    Scalar constant_of(const Elem& e) const { return e.constant_term(); }
};

struct PolyOps {
    unsigned nvars;
    RingDescriptor ring;
    char var;
    using Elem = Poly;
    Elem from_scalar(const Scalar& c) const { return Poly::constant(nvars, c); }
    Elem variable(char letter, unsigned index, size_t pos) const {
        if (letter != var)
            fail(Errc::ParseError, std::string("unknown variable letter '") + letter + "' at position " +
                                       std::to_string(pos));
        if (index < 1 || index > nvars)
            fail(Errc::IndexOutOfRange, std::string(1, letter) + std::to_string(index) + " with " +
                                            std::to_string(nvars) + " variables");
        return Poly::variable(nvars, ring, index);
    }
    Elem pow(const Elem& e, unsigned long m) const { return weylbkk::pow(e, m); }
    bool is_constant(const Elem& e) const { return e.is_constant(); }
    Scalar constant_of(const Elem& e) const { return e.coeff(MultiIndex(nvars, 0)); }
};

template <typename Ops>
class Parser {
public:
    Parser(std::string_view text, Ops ops) : lex_(text), ops_(ops) {}

    typename Ops::Elem run() {
        auto e = expr();
        if (lex_.peek().kind != Token::End)
            fail(Errc::ParseError, "trailing input at position " + std::to_string(lex_.peek().pos));
        return e;
    }

private:
    using Elem = typename Ops::Elem;

    Elem expr() {
        bool negate = false;
        if (lex_.peek().kind == Token::Minus) {
            lex_.take();
            negate = true;
        }
        Elem acc = term();
        if (negate) acc = -acc;
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            bool minus = lex_.take().kind == Token::Minus;
            Elem t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Elem term() {
        Elem acc = factor();
        while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
            bool divide = lex_.take().kind == Token::Slash;
            size_t pos = lex_.peek().pos;
            Elem f = factor();
            if (divide) {
                if (!ops_.is_constant(f))
                    fail(Errc::ParseError, "divisor at position " + std::to_string(pos) + " is not a scalar");
                acc = ops_.from_scalar(ops_.constant_of(f).inv()) * acc;
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

    Elem factor() {
        Elem a = atom();
        if (lex_.peek().kind == Token::Caret) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Token::Int)
                fail(Errc::ParseError, "expected exponent at position " + std::to_string(t.pos));
            return ops_.pow(a, static_cast<unsigned long>(t.value));
        }
        return a;
    }

    Elem atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Int:
            return ops_.from_scalar(Scalar::from_int(ops_.ring, t.value));
        case Token::T:
            if (ops_.ring.kind != RingDescriptor::Kind::RationalFunctions)
                fail(Errc::LiteralNotInRing, "'t' literal needs the F_p(t) ring");
            return ops_.from_scalar(Scalar::t(ops_.ring.p));
        case Token::Var:
            return ops_.variable(t.letter, t.index, t.pos);
        case Token::LParen: {
            Elem e = expr();
            Token close = lex_.take();
            if (close.kind != Token::RParen)
                fail(Errc::ParseError, "expected ')' at position " + std::to_string(close.pos));
            return e;
        }
        default:
            fail(Errc::ParseError, "unexpected token at position " + std::to_string(t.pos));
        }
    }

    Lexer lex_;
    Ops ops_;
};

} // namespace

WeylElement parse_weyl_expr(std::string_view text, unsigned n, const RingDescriptor& ring) {
    return Parser<WeylOps>(text, WeylOps{n, ring}).run();
}

Poly parse_poly_expr(std::string_view text, unsigned nvars, const RingDescriptor& ring, char var) {
    return Parser<PolyOps>(text, PolyOps{nvars, ring, var}).run();
}

Scalar parse_scalar(std::string_view text, const RingDescriptor& ring) {
    Poly q = parse_poly_expr(text, 1, ring, 'z');
    if (!q.is_constant()) fail(Errc::ParseError, "expected a scalar literal, got a polynomial");
    return q.coeff(MultiIndex(1, 0));
}

// ---------------------------------------------------------------------------
// documents

namespace {

json ring_to_json(const RingDescriptor& ring) {
    switch (ring.kind) {
    case RingDescriptor::Kind::Integers: return {{"kind", "integers"}};
    case RingDescriptor::Kind::PrimeField: return {{"kind", "prime_field"}, {"p", ring.p}};
    case RingDescriptor::Kind::RationalFunctions: return {{"kind", "rational_functions"}, {"p", ring.p}};
    }
    fail(Errc::InvalidArgument, "bad ring");
}

RingDescriptor ring_from(const json& j) {
    if (!j.is_object() || !j.contains("kind")) fail(Errc::ParseError, "ring descriptor needs a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "integers") return RingDescriptor::integers();
    if (kind == "prime_field") return RingDescriptor::prime_field(j.at("p").get<long>());
    if (kind == "rational_functions") return RingDescriptor::rational_functions(j.at("p").get<long>());
    fail(Errc::ParseError, "unknown ring kind '" + kind + "'");
}

json word_to_json(unsigned n, const TameWord& word) {
    json arr = json::array();
    for (const auto& gen : word) {
        if (const auto* e = std::get_if<ElementaryGen>(&gen)) {
            arr.push_back({{"type", "elementary"}, {"potential", to_string(e->potential, 'x')}});
        } else {
            const auto& m = std::get<LinearGen>(gen).matrix;
            json rows = json::array();
            for (unsigned i = 0; i < 2 * n; ++i) {
                json row = json::array();
                for (unsigned j = 0; j < 2 * n; ++j) row.push_back(m.at(i, j).to_string());
                rows.push_back(row);
            }
            arr.push_back({{"type", "linear"}, {"matrix", rows}});
        }
    }
    return arr;
}

TameWord word_from_json(const json& arr, unsigned n, const RingDescriptor& ring) {
    TameWord word;
    for (const auto& g : arr) {
        std::string type = g.at("type").get<std::string>();
        if (type == "elementary") {
            word.push_back(ElementaryGen{
                parse_poly_expr(g.at("potential").get<std::string>(), n, ring, 'x')});
        } else if (type == "linear") {
            const auto& rows = g.at("matrix");
            if (rows.size() != 2 * n) fail(Errc::ParseError, "linear generator matrix must be 2n x 2n");
            Mat m(2 * n, 2 * n, Scalar::zero(ring));
            for (unsigned i = 0; i < 2 * n; ++i) {
                if (rows[i].size() != 2 * n) fail(Errc::ParseError, "linear generator matrix must be 2n x 2n");
                for (unsigned j = 0; j < 2 * n; ++j) {
                    const auto& cell = rows[i][j];
                    m.at(i, j) = cell.is_number_integer() ? Scalar::from_int(ring, cell.get<long>())
                                                          : parse_scalar(cell.get<std::string>(), ring);
                }
            }
            word.push_back(LinearGen{std::move(m)});
        } else {
            fail(Errc::ParseError, "unknown generator type '" + type + "'");
        }
    }
    return word;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Errc::ParseError, "malformed JSON document");
    return j;
}

} // namespace

RingDescriptor ring_from_json(const std::string& json_text) { return ring_from(parse_json(json_text)); }

WeylMorphism parse_morphism(const std::string& json_text) {
    json doc = parse_json(json_text);
    unsigned n = doc.at("n").get<unsigned>();
    RingDescriptor ring = ring_from(doc.at("ring"));

    std::optional<TameWord> word;
    if (doc.contains("word")) word = word_from_json(doc.at("word"), n, ring);

    if (!doc.contains("images")) {
        if (!word) fail(Errc::ParseError, "morphism document needs 'images' or 'word'");
        return morphism_from_word(n, ring, *word);
    }

    const auto& arr = doc.at("images");
    if (arr.size() != 2 * n) fail(Errc::ParseError, "expected 2n generator images");
    std::vector<WeylElement> images;
    for (const auto& s : arr) images.push_back(parse_weyl_expr(s.get<std::string>(), n, ring));

    std::optional<std::vector<WeylElement>> inverse;
    if (doc.contains("inverse_images")) {
        std::vector<WeylElement> inv;
        for (const auto& s : doc.at("inverse_images"))
            inv.push_back(parse_weyl_expr(s.get<std::string>(), n, ring));
        inverse = std::move(inv);
    }

    if (word) {
        WeylMorphism from_word = morphism_from_word(n, ring, *word);
        if (from_word.images() != images)
            fail(Errc::Mismatch, "document images do not match the images derived from its word");
        if (!inverse) return from_word;
    }
    return WeylMorphism::validate(std::move(images), std::move(inverse), std::move(word));
}

std::string emit_morphism(const WeylMorphism& f) {
    json doc;
    doc["n"] = f.pairs();
    doc["ring"] = ring_to_json(f.ring());
    json images = json::array();
    for (const auto& im : f.images()) images.push_back(to_string(im));
    doc["images"] = images;
    if (f.inverse_images()) {
        json inv = json::array();
        for (const auto& im : *f.inverse_images()) inv.push_back(to_string(im));
        doc["inverse_images"] = inv;
    }
    if (f.provenance()) doc["word"] = word_to_json(f.pairs(), *f.provenance());
    return doc.dump(2);
}

TameWord parse_word_document(const std::string& json_text, unsigned& n_out, RingDescriptor& ring_out) {
    json doc = parse_json(json_text);
    n_out = doc.at("n").get<unsigned>();
    ring_out = ring_from(doc.at("ring"));
    return word_from_json(doc.at("word"), n_out, ring_out);
}

std::string emit_word_document(unsigned n, const RingDescriptor& ring, const TameWord& word) {
    json doc;
    doc["n"] = n;
    doc["ring"] = ring_to_json(ring);
    doc["word"] = word_to_json(n, word);
    return doc.dump(2);
}

namespace {

json symplecto_json(const SymplectoMap& s) {
    json images = json::array();
    for (const auto& im : s.images) images.push_back(to_string(im));
    return images;
}

} // namespace

std::string emit_report(const CheckReport& rep) {
    json j;
    j["check"] = rep.check;
    json params;
    for (const auto& [k, v] : rep.params) params[k] = v;
    params["precondition_ok"] = rep.precondition_ok;
    j["params"] = params;
    j["pass"] = rep.pass;
    j["witnesses"] = rep.witnesses;
    j["timing_ms"] = rep.timing_ms;
    return j.dump(2);
}

std::string emit_report(const IndependenceReport& rep) {
    json j;
    j["check"] = "independence";
    json params;
    params["n"] = rep.n;
    params["degree_bound"] = rep.degree_bound;
    json primes = json::array();
    for (const auto& r : rep.per_prime) primes.push_back(r.p);
    params["primes"] = primes;
    params["word"] = json::parse(emit_word_document(rep.n, RingDescriptor::integers(), rep.word));
    params["precondition_ok"] = rep.all_preconditions_ok();
    j["params"] = params;
    j["pass"] = rep.all_match();

    json witnesses = json::array();
    for (const auto& r : rep.per_prime) {
        json w;
        w["kind"] = "per_prime";
        w["p"] = r.p;
        w["precondition_ok"] = r.precondition_ok;
        w["match"] = r.match;
        w["computed"] = symplecto_json(r.computed);
        w["expected"] = symplecto_json(r.expected);
        witnesses.push_back(w);
    }
    json crt;
    crt["kind"] = "crt";
    crt["reconstructed"] = symplecto_json(rep.crt_reconstructed);
    crt["expected_integer"] = symplecto_json(rep.expected_integer);
    crt["matches_expected"] = rep.crt_matches_expected;
    crt["pairwise_consistent"] = rep.pairwise_consistent;
    witnesses.push_back(crt);
    j["witnesses"] = witnesses;
    j["timing_ms"] = rep.timing_ms;
    return j.dump(2);
}

} // namespace weylbkk::io
