// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/identity/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gfpkit/errors.hpp"

namespace gfpkit {

namespace {

const std::set<std::string, std::less<>> kIndexVars = {"n", "m", "r", "s", "t",
                                                       "i", "j", "k", "u", "v"};

struct Token {
    enum class Type { Ident, Int, Punct, End };
    Type type = Type::End;
    std::string text;
    int column = 0;  // 1-based
};

class Lexer {
public:
    Lexer(std::string_view text, int line, std::string source)
        : text_(text), line_(line), source_(std::move(source)) {
        advance();
    }

    const Token& peek() const { return tok_; }
    int line() const { return line_; }
    const std::string& source() const { return source_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    bool accept_punct(std::string_view p) {
        if (tok_.type == Token::Type::Punct && tok_.text == p) {
            advance();
            return true;
        }
        return false;
    }

    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) fail("expected '" + std::string(p) + "'");
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw SyntaxError(why, line_, tok_.column, source_);
    }

    bool at_end() const { return tok_.type == Token::Type::End; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    std::string source_;
    Token tok_;

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_ = Token{Token::Type::End, "", tok_.column};
            return;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = Token{Token::Type::Ident, std::string(text_.substr(start, pos_ - start)),
                         static_cast<int>(start) + 1};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            tok_ = Token{Token::Type::Int, std::string(text_.substr(start, pos_ - start)),
                         static_cast<int>(start) + 1};
            return;
        }
        static const std::string two_char[] = {">=", ".."};
        for (const std::string& p : two_char) {
            if (text_.substr(pos_).substr(0, 2) == p) {
                tok_ = Token{Token::Type::Punct, p, static_cast<int>(pos_) + 1};
                pos_ += 2;
                return;
            }
        }
        tok_ = Token{Token::Type::Punct, std::string(1, c), static_cast<int>(pos_) + 1};
        ++pos_;
    }
};

// -- index expressions --------------------------------------------------------

IndexExpr parse_iexpr(Lexer& lx, bool allow_alpha);

IndexExpr parse_iprimary(Lexer& lx, bool allow_alpha) {
    const Token& t = lx.peek();
    if (t.type == Token::Type::Int) {
        std::int64_t v = std::stoll(lx.next().text);
        // implicit multiplication: "2n", "4m"
        if (lx.peek().type == Token::Type::Ident) {
            Token var = lx.next();
            if (!kIndexVars.contains(var.text))
                throw UnknownSymbol("unknown index variable '" + var.text + "'", lx.line(),
                                    var.column, lx.source());
            return IndexExpr::mul(IndexExpr::constant(v), IndexExpr::variable(var.text));
        }
        return IndexExpr::constant(v);
    }
    if (t.type == Token::Type::Ident) {
        Token var = lx.next();
        if (allow_alpha && var.text == "alpha") return IndexExpr::variable("alpha");
        if (!kIndexVars.contains(var.text))
            throw UnknownSymbol("unknown index variable '" + var.text + "'", lx.line(), var.column,
                                lx.source());
        return IndexExpr::variable(var.text);
    }
    if (lx.accept_punct("(")) {
        IndexExpr e = parse_iexpr(lx, allow_alpha);
        lx.expect_punct(")");
        return e;
    }
    if (lx.accept_punct("-")) return IndexExpr::neg(parse_iprimary(lx, allow_alpha));
    lx.fail("expected an index expression");
}

IndexExpr parse_iterm(Lexer& lx, bool allow_alpha) {
    IndexExpr e = parse_iprimary(lx, allow_alpha);
    while (lx.accept_punct("*")) e = IndexExpr::mul(std::move(e), parse_iprimary(lx, allow_alpha));
    return e;
}

IndexExpr parse_iexpr(Lexer& lx, bool allow_alpha) {
    IndexExpr e = parse_iterm(lx, allow_alpha);
    while (true) {
        if (lx.accept_punct("+"))
            e = IndexExpr::add(std::move(e), parse_iterm(lx, allow_alpha));
        else if (lx.accept_punct("-"))
            e = IndexExpr::sub(std::move(e), parse_iterm(lx, allow_alpha));
        else
            return e;
    }
}

// -- identity expressions -------------------------------------------------------

Expr parse_expr(Lexer& lx);

IndexExpr parse_exponent(Lexer& lx) {
    if (lx.accept_punct("(")) {
        IndexExpr e = parse_iexpr(lx, false);
        lx.expect_punct(")");
        return e;
    }
    const Token& t = lx.peek();
    if (t.type == Token::Type::Int) return IndexExpr::constant(std::stoll(lx.next().text));
    if (t.type == Token::Type::Ident) {
        Token var = lx.next();
        if (!kIndexVars.contains(var.text))
            throw UnknownSymbol("unknown index variable '" + var.text + "'", lx.line(), var.column,
                                lx.source());
        return IndexExpr::variable(var.text);
    }
    lx.fail("expected an exponent");
}

Expr parse_primary(Lexer& lx) {
    const Token& t = lx.peek();
    if (t.type == Token::Type::Int) {
        std::string num = lx.next().text;
        if (lx.accept_punct("/")) {
            const Token& den = lx.peek();
            if (den.type != Token::Type::Int) lx.fail("expected a denominator");
            return Expr::literal(parse_rational(num + "/" + lx.next().text));
        }
        return Expr::literal(parse_rational(num));
    }
    if (t.type == Token::Type::Ident) {
        Token id = lx.next();
        if (id.text == "Gp" || id.text == "Gs") {
            lx.expect_punct("[");
            IndexExpr idx = parse_iexpr(lx, false);
            lx.expect_punct("]");
            return id.text == "Gp" ? Expr::gp(std::move(idx)) : Expr::gs(std::move(idx));
        }
        if (id.text == "sqrt") {
            lx.expect_punct("(");
            Expr e = parse_expr(lx);
            lx.expect_punct(")");
            return Expr::sqrt(std::move(e));
        }
        if (id.text == "d") return Expr::sym(Expr::Kind::SymD);
        if (id.text == "g") return Expr::sym(Expr::Kind::SymG);
        if (id.text == "alpha") return Expr::sym(Expr::Kind::SymAlpha);
        if (id.text == "Delta") return Expr::sym(Expr::Kind::SymDelta);
        if (id.text == "S") return Expr::sym(Expr::Kind::SymS);
        if (id.text == "neg_g") return Expr::neg(Expr::sym(Expr::Kind::SymG));
        throw UnknownSymbol("unknown symbol '" + id.text + "'", lx.line(), id.column, lx.source());
    }
    if (lx.accept_punct("(")) {
        Expr e = parse_expr(lx);
        lx.expect_punct(")");
        return e;
    }
    lx.fail("expected an expression");
}

Expr parse_power(Lexer& lx) {
    Expr base = parse_primary(lx);
    if (lx.accept_punct("^")) return Expr::pow(std::move(base), parse_exponent(lx));
    return base;
}

Expr parse_unary(Lexer& lx) {
    if (lx.accept_punct("-")) return Expr::neg(parse_unary(lx));
    return parse_power(lx);
}

Expr parse_term(Lexer& lx) {
    Expr e = parse_unary(lx);
    while (lx.accept_punct("*")) e = Expr::mul(std::move(e), parse_unary(lx));
    return e;
}

Expr parse_expr(Lexer& lx) {
    Expr e = parse_term(lx);
    while (true) {
        if (lx.accept_punct("+"))
            e = Expr::add(std::move(e), parse_term(lx));
        else if (lx.accept_punct("-"))
            e = Expr::sub(std::move(e), parse_term(lx));
        else
            return e;
    }
}

Constraint parse_constraint(Lexer& lx) {
    Constraint c;
    c.lhs = parse_iexpr(lx, true);
    if (lx.accept_punct(">="))
        c.rel = Constraint::Rel::Ge;
    else if (lx.accept_punct(">"))
        c.rel = Constraint::Rel::Gt;
    else if (lx.accept_punct("="))
        c.rel = Constraint::Rel::Eq;
    else
        lx.fail("expected '>=', '>' or '='");
    c.rhs = parse_iexpr(lx, true);
    return c;
}

std::string strip_comment(std::string_view line) {
    const std::size_t hash = line.find('#');
    std::string out(hash == std::string_view::npos ? line : line.substr(0, hash));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    return out;
}

}  // namespace

IdentityDef parse_identity(std::string_view text, std::string_view source_name) {
    IdentityDef def;
    const std::string source(source_name);
    bool saw_identity = false, saw_lhs = false, saw_rhs = false;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        if (line.empty()) continue;

        Lexer lx(line, line_no, source);
        const Token head = lx.next();
        if (head.type != Token::Type::Ident)
            throw SyntaxError("expected a directive", line_no, head.column, source);

        if (head.text == "identity") {
            // the id runs to the end of the line (ids like P1.1 contain '.')
            std::size_t at = line.find_first_not_of(" \t", head.column - 1 + 8);
            if (at == std::string::npos)
                throw SyntaxError("missing identity id", line_no, head.column, source);
            def.id = line.substr(at);
            saw_identity = true;
        } else if (head.text == "vars") {
            while (!lx.at_end()) {
                Token v = lx.next();
                if (v.type != Token::Type::Ident || !kIndexVars.contains(v.text))
                    throw UnknownSymbol("bad index variable in vars", line_no, v.column, source);
                if (std::find(def.vars.begin(), def.vars.end(), v.text) != def.vars.end())
                    throw SyntaxError("duplicate variable '" + v.text + "'", line_no, v.column,
                                      source);
                def.vars.push_back(v.text);
            }
        } else if (head.text == "constraints") {
            while (true) {
                def.constraints.push_back(parse_constraint(lx));
                if (!lx.accept_punct(";")) break;
            }
            if (!lx.at_end()) lx.fail("trailing tokens after constraints");
        } else if (head.text == "range") {
            Token v = lx.next();
            if (v.type != Token::Type::Ident)
                throw SyntaxError("expected a variable", line_no, v.column, source);
            Token lo = lx.next();
            lx.expect_punct("..");
            Token hi = lx.next();
            if (lo.type != Token::Type::Int || hi.type != Token::Type::Int)
                throw SyntaxError("expected <lo>..<hi>", line_no, lo.column, source);
            def.ranges[v.text] = RangeOverride{std::stoll(lo.text), std::stoll(hi.text)};
        } else if (head.text == "lhs" || head.text == "rhs") {
            Expr e = parse_expr(lx);
            if (!lx.at_end()) lx.fail("trailing tokens after expression");
            (head.text == "lhs" ? def.lhs : def.rhs) = std::move(e);
            (head.text == "lhs" ? saw_lhs : saw_rhs) = true;
        } else {
            throw SyntaxError("unknown directive '" + head.text + "'", line_no, head.column,
                              source);
        }
    }

    if (!saw_identity) throw SyntaxError("missing 'identity' line", 1, 1, source);
    if (!saw_lhs || !saw_rhs)
        throw SyntaxError("identity " + def.id + " needs both lhs and rhs", line_no, 1, source);

    // Every variable used anywhere must be declared.
    std::set<std::string> used;
    def.lhs.collect_vars(used);
    def.rhs.collect_vars(used);
    for (const Constraint& c : def.constraints) {
        c.lhs.collect_vars(used);
        c.rhs.collect_vars(used);
    }
    used.erase("alpha");
    for (const std::string& v : used)
        if (std::find(def.vars.begin(), def.vars.end(), v) == def.vars.end())
            throw UnboundVariable(v);
    for (const auto& [v, r] : def.ranges) {
        if (std::find(def.vars.begin(), def.vars.end(), v) == def.vars.end())
            throw UnboundVariable(v);
        if (r.lo > r.hi)
            throw SyntaxError("empty range for '" + v + "'", 1, 1, source);
    }
    return def;
}

IdentityDef load_identity_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_identity(buf.str(), file.filename().string());
}

bool id_less(const std::string& a, const std::string& b) {
    auto key = [](const std::string& id) {
        // (group, major, minor): P<p>.<k> -> (0, p, k); I<k> -> (1, 3, k)
        if (!id.empty() && id[0] == 'P') {
            const std::size_t dot = id.find('.');
            if (dot != std::string::npos) {
                try {
                    return std::tuple<int, long, long>(0, std::stol(id.substr(1, dot - 1)),
                                                       std::stol(id.substr(dot + 1)));
                } catch (...) {}
            }
        }
        if (!id.empty() && id[0] == 'I') {
            try {
                return std::tuple<int, long, long>(1, 3, std::stol(id.substr(1)));
            } catch (...) {}
        }
        return std::tuple<int, long, long>(2, 0, 0);
    };
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return a < b;
}

std::map<std::string, ManifestEntry> load_manifest(const std::filesystem::path& dir) {
    const std::filesystem::path file = dir / "manifest.json";
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file.string());
    nlohmann::json j = nlohmann::json::parse(in);
    std::map<std::string, ManifestEntry> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = ManifestEntry{it.value().at("proposition").get<int>(),
                                      it.value().at("part").get<int>()};
    return out;
}

std::vector<IdentityDef> load_corpus(const std::filesystem::path& dir) {
    auto manifest = load_manifest(dir);
    std::vector<std::string> ids;
    ids.reserve(manifest.size());
    for (const auto& [id, entry] : manifest) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), id_less);

    std::vector<IdentityDef> corpus;
    corpus.reserve(ids.size());
    for (const std::string& id : ids) {
        IdentityDef def = load_identity_file(dir / (id + ".gfpid"));
        if (def.id != id)
            throw Error("identity id '" + def.id + "' does not match file name '" + id + ".gfpid'");
        corpus.push_back(std::move(def));
    }
    return corpus;
}

}  // namespace gfpkit
