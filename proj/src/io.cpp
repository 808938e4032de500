#include "natq/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "natq/error.hpp"

namespace natq {

json algebra_to_json(const Algebra& a, const json& metadata) {
    json j;
    j["field"] = {{"p", a.field()->p()}, {"d", a.field()->degree()}};
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    json unit = json::array();
    for (auto c : a.unit()) unit.push_back(int(c));
    j["unit"] = unit;
    json mult = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const Vec& v = a.product(i, k);
            json terms = json::array();
            for (std::size_t t = 0; t < v.size(); ++t)
                if (v[t]) terms.push_back({t, int(v[t])});
            if (!terms.empty()) mult.push_back({i, k, terms});
        }
    j["mult"] = mult;
    if (!metadata.is_null()) j["metadata"] = metadata;
    return j;
}

json gpa_to_json(const GPAlgebra& g) {
    json meta;
    json verts = json::array();
    for (auto& v : g.quiver.vertices) verts.push_back({{"name", v.name}, {"n", v.n}, {"ext_degree", v.ext_degree}});
    json arrows = json::array();
    for (auto& a : g.quiver.arrows)
        arrows.push_back({{"name", a.name}, {"source", g.quiver.vertices[a.source].name},
                          {"target", g.quiver.vertices[a.target].name}});
    meta["kind"] = "generalized path algebra";
    meta["vertices"] = verts;
    meta["arrows"] = arrows;
    if (g.truncation) meta["truncation"] = *g.truncation;
    json j = algebra_to_json(g.realization, meta);
    j["grading"] = g.grading;
    return j;
}

std::string dump_algebra_file(const json& j) {
    std::string out = "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        out += "  " + json(it.key()).dump() + ": ";
        if ((it.key() == "mult" || it.key() == "grading") && it->is_array() && !it->empty()) {
            out += "[\n";
            for (std::size_t i = 0; i < it->size(); ++i)
                out += "    " + (*it)[i].dump() + (i + 1 < it->size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += it->dump();
        }
        out += k + 1 < j.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

namespace {

[[noreturn]] void schema(const std::string& msg) { fail(ErrorKind::ParseError, "algebra file: " + msg); }

std::size_t index_in(const json& v, std::size_t bound, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || std::size_t(v.get<long long>()) >= bound)
        schema(std::string(what) + " out of range");
    return std::size_t(v.get<long long>());
}

Elem coeff_in(const json& v, const Field& f) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= f.order())
        schema("coefficient not a reduced field element");
    return Elem(v.get<long long>());
}

}  // namespace

Algebra algebra_from_json(const json& j) {
    if (!j.is_object()) schema("top level must be an object");
    for (auto key : {"field", "dim", "unit", "mult"})
        if (!j.contains(key)) schema(std::string("missing \"") + key + "\"");
    const json& fj = j["field"];
    if (!fj.is_object() || !fj.contains("p") || !fj["p"].is_number_integer()) schema("field needs integer p");
    int d = fj.contains("d") ? fj["d"].get<int>() : 1;
    FieldPtr f = Field::make(fj["p"].get<int>(), d);
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) schema("dim must be a positive integer");
    std::size_t n = j["dim"].get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != n) schema("basis must list dim labels");
        for (auto& l : j["basis"]) labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    }
    if (!j["unit"].is_array() || j["unit"].size() != n) schema("unit must have dim coordinates");
    Vec unit;
    for (auto& c : j["unit"]) unit.push_back(coeff_in(c, *f));
    std::vector<Vec> table(n * n, Vec(n, 0));
    std::vector<bool> seen(n * n, false);
    if (!j["mult"].is_array()) schema("mult must be an array");
    for (auto& t : j["mult"]) {
        if (!t.is_array() || t.size() != 3 || !t[2].is_array()) schema("mult entries are [i, j, [[k, c], ...]]");
        std::size_t a = index_in(t[0], n, "mult index"), b = index_in(t[1], n, "mult index");
        if (seen[a * n + b]) schema("duplicate mult entry for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        seen[a * n + b] = true;
        for (auto& term : t[2]) {
            if (!term.is_array() || term.size() != 2) schema("mult terms are [k, c]");
            std::size_t k = index_in(term[0], n, "mult term index");
            Vec& v = table[a * n + b];
            v[k] = f->add(v[k], coeff_in(term[1], *f));
        }
    }
    return Algebra(f, std::move(labels), std::move(unit), std::move(table));
}

// ---------------------------------------------------------------------------
// Presentation parser

namespace {

struct Token {
    enum Kind { Name, Int, Sym, End } kind;
    std::string text;
    std::size_t col;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class LineParser {
public:
    LineParser(std::string_view line, std::size_t lineno) : lineno_(lineno) {
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == '#') break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (name_char(c)) {
                bool digits = true;
                for (; i < line.size() && name_char(line[i]); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(line[i]))) digits = false;
                toks_.push_back({digits ? Token::Int : Token::Name, std::string(line.substr(start, i - start)), start + 1});
            } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
                toks_.push_back({Token::Sym, "->", start + 1});
                i += 2;
            } else if (std::string_view(":*+-=(),").find(c) != std::string_view::npos) {
                toks_.push_back({Token::Sym, std::string(1, c), start + 1});
                ++i;
            } else {
                error(start + 1, std::string("unexpected character '") + c + "'");
            }
        }
        toks_.push_back({Token::End, "", line.size() + 1});
    }

    bool empty() const { return toks_.size() == 1; }
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at_symbol(std::string_view s) const { return peek().kind == Token::Sym && peek().text == s; }
    bool at_end() const { return peek().kind == Token::End; }

    Token expect_name(const char* what) {
        Token t = next();
        if (t.kind != Token::Name && t.kind != Token::Int) error(t.col, std::string("expected ") + what);
        return t;
    }
    long long expect_int(const char* what) {
        Token t = next();
        if (t.kind != Token::Int) error(t.col, std::string("expected ") + what);
        return std::stoll(t.text);
    }
    void expect_symbol(std::string_view s) {
        Token t = next();
        if (t.kind != Token::Sym || t.text != s) error(t.col, "expected '" + std::string(s) + "'");
    }
    void expect_end() {
        if (!at_end()) error(peek().col, "unexpected '" + peek().text + "'");
    }
    [[noreturn]] void error(std::size_t col, const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
        fail(kind, "line " + std::to_string(lineno_) + ", column " + std::to_string(col) + ": " + msg);
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t lineno_;
};

}  // namespace

QuiverPresentation parse_presentation(std::string_view text) {
    QuiverPresentation q;
    std::map<std::string, std::size_t> vertices, arrows;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        LineParser lp(line, lineno);
        if (lp.empty()) continue;
        Token kw = lp.next();
        if (kw.kind != Token::Name) lp.error(kw.col, "expected a keyword");
        if (kw.text != "field" && !q.field) lp.error(kw.col, "the field must be declared first");
        if (kw.text == "field") {
            if (q.field) lp.error(kw.col, "field declared twice");
            long long p = lp.expect_int("a prime");
            long long d = lp.at_end() ? 1 : lp.expect_int("an extension degree");
            lp.expect_end();
            try {
                q.field = Field::make(int(p), int(d));
            } catch (const Error& e) {
                // Keep the field's own kind; what() already starts with "Kind: ".
                std::string msg = e.what();
                lp.error(kw.col, msg.substr(msg.find(": ") + 2), e.kind());
            }
        } else if (kw.text == "vertex") {
            Token name = lp.expect_name("a vertex name");
            if (vertices.count(name.text)) lp.error(name.col, "vertex '" + name.text + "' declared twice");
            QuiverVertex v{name.text};
            if (!lp.at_end()) {
                Token b = lp.expect_name("'block'");
                if (b.text != "block") lp.error(b.col, "expected 'block'");
                lp.expect_symbol("=");
                Token m = lp.expect_name("'matrix'");
                if (m.text != "matrix") lp.error(m.col, "expected 'matrix'");
                lp.expect_symbol("(");
                std::size_t col = lp.peek().col;
                v.n = int(lp.expect_int("a matrix size"));
                lp.expect_symbol(",");
                v.ext_degree = int(lp.expect_int("an extension degree"));
                lp.expect_symbol(")");
                if (v.n < 1 || v.ext_degree < 1) lp.error(col, "block sizes must be positive", ErrorKind::BadDecoration);
            }
            lp.expect_end();
            vertices[v.name] = q.vertices.size();
            q.vertices.push_back(v);
        } else if (kw.text == "arrow") {
            Token name = lp.expect_name("an arrow name");
            if (!std::isalpha(static_cast<unsigned char>(name.text[0])))
                lp.error(name.col, "arrow names must start with a letter");
            if (arrows.count(name.text)) lp.error(name.col, "arrow '" + name.text + "' declared twice");
            lp.expect_symbol(":");
            Token s = lp.expect_name("a source vertex");
            lp.expect_symbol("->");
            Token t = lp.expect_name("a target vertex");
            lp.expect_end();
            for (auto* tok : {&s, &t})
                if (!vertices.count(tok->text))
                    lp.error(tok->col, "undeclared vertex '" + tok->text + "'", ErrorKind::UndeclaredSymbol);
            arrows[name.text] = q.arrows.size();
            q.arrows.push_back({name.text, vertices[s.text], vertices[t.text]});
        } else if (kw.text == "relation") {
            std::vector<PathTerm> rel;
            bool first = true;
            while (!lp.at_end()) {
                bool negate = false;
                if (lp.at_symbol("+") || lp.at_symbol("-")) {
                    negate = lp.next().text == "-";
                } else if (!first) {
                    lp.error(lp.peek().col, "expected '+' or '-'");
                }
                first = false;
                Elem c = 1;
                if (lp.peek().kind == Token::Int) {
                    c = q.field->from_int(lp.expect_int("a coefficient"));
                    if (lp.at_symbol("*")) lp.next();
                }
                if (negate) c = q.field->neg(c);
                Token a = lp.expect_name("an arrow");
                std::size_t path_col = a.col;
                QuiverPath p;
                while (true) {
                    if (!arrows.count(a.text))
                        lp.error(a.col, "undeclared arrow '" + a.text + "'", ErrorKind::UndeclaredSymbol);
                    std::size_t ai = arrows[a.text];
                    if (p.arrows.empty()) {
                        p.source = q.arrows[ai].source;
                    } else if (q.arrows[p.arrows.back()].target != q.arrows[ai].source) {
                        lp.error(a.col, "arrow '" + a.text + "' does not start where the path ends",
                                 ErrorKind::NonComposablePath);
                    }
                    p.arrows.push_back(ai);
                    if (!lp.at_symbol("*")) break;
                    lp.next();
                    a = lp.expect_name("an arrow");
                }
                if (!rel.empty() && (rel.front().path.source != p.source || q.target(rel.front().path) != q.target(p)))
                    lp.error(path_col, "relation terms have different endpoints", ErrorKind::MalformedRelation);
                if (c != 0) rel.push_back({c, p});
            }
            if (first) lp.error(kw.col, "empty relation");
            q.relations.push_back(std::move(rel));
        } else {
            lp.error(kw.col, "unknown keyword '" + kw.text + "'");
        }
    }
    if (!q.field) fail(ErrorKind::ParseError, "line 1, column 1: missing field declaration");
    return q;
}

bool presentation_is_decorated(const QuiverPresentation& q) {
    for (auto& v : q.vertices)
        if (v.n != 1 || v.ext_degree != 1) return true;
    return false;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Algebra load_algebra(const std::string& path, std::optional<unsigned> truncation) {
    std::string text = read_text_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            fail(ErrorKind::ParseError, path + ": " + e.what());
        }
        return algebra_from_json(j);
    }
    QuiverPresentation q = parse_presentation(text);
    if (presentation_is_decorated(q)) {
        if (!q.relations.empty())
            fail(ErrorKind::MalformedRelation, "relations are not supported on decorated presentations");
        return generalized_path_algebra(q, truncation).realization;
    }
    return path_algebra(q, truncation).algebra;
}

// ---------------------------------------------------------------------------

std::string_view quiver_kind_name(QuiverKind k) {
    switch (k) {
        case QuiverKind::Natural: return "natural_quiver";
        case QuiverKind::Ext: return "ext_quiver";
        case QuiverKind::Diagram: return "diagram";
        case QuiverKind::Gpa: return "gpa_ext_quiver";
    }
    return "quiver";
}

std::string emit_dot(const QuiverMatrices& q, QuiverKind which) {
    const std::optional<IntMatrix>* m = nullptr;
    switch (which) {
        case QuiverKind::Natural: m = &q.t; break;
        case QuiverKind::Ext: m = &q.m; break;
        case QuiverKind::Diagram: m = &q.h; break;
        case QuiverKind::Gpa: m = &q.g; break;
    }
    if (!*m) fail(ErrorKind::Internal, "requested quiver matrix was not computed");
    std::ostringstream out;
    out << "digraph " << quiver_kind_name(which) << " {\n";
    for (std::size_t i = 0; i < q.s; ++i) {
        auto [n, d] = q.labels[i];
        out << "  \"" << i + 1 << "\" [label=\"" << i + 1 << ": M_{" << n << "}(F_{" << q.p << "^"
            << d * q.base_degree << "})\"];\n";
    }
    for (std::size_t i = 0; i < q.s; ++i)
        for (std::size_t j = 0; j < q.s; ++j)
            for (int k = 0; k < (**m)[i][j]; ++k) out << "  \"" << i + 1 << "\" -> \"" << j + 1 << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace natq
