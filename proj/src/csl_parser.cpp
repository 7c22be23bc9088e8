#include "actcheck/csl/parser.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace actcheck::csl {

const char* status_keyword(RequirementStatus status) {
    switch (status) {
    case RequirementStatus::Attested: return "attested";
    case RequirementStatus::Open: return "open";
    case RequirementStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::string format_error(const ParseError& error) {
    return format_span(error.span) + ": " + error.message;
}

namespace {

enum class Tok { Ident, String, Int, LBrace, RBrace, LBracket, RBracket, Comma, Dot, Arrow, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;        // identifier text or unescaped string value
    long long number = 0;    // Tok::Int
    SourceSpan span;
};

const char* token_name(Tok kind) {
    switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of file";
    }
    return "?";
}

class Lexer {
public:
    Lexer(std::string_view src, std::string file, std::vector<ParseError>& errors)
        : src_(src), file_(std::move(file)), errors_(errors) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            Token t = next();
            const bool end = t.kind == Tok::End;
            tokens.push_back(std::move(t));
            if (end) break;
        }
        return tokens;
    }

private:
    std::string_view src_;
    std::string file_;
    std::vector<ParseError>& errors_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    SourceSpan here(int length = 1) const { return {file_, line_, column_, length}; }

    void error(const SourceSpan& span, std::string message,
               std::vector<std::string> expected = {}) {
        errors_.push_back({span, std::move(message), std::move(expected)});
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string lex_ident_text() {
        std::string text;
        while (!eof() && ident_char(peek())) text.push_back(advance());
        return text;
    }

    Token next() {
        for (;;) {
            Token token;
            if (lex_one(token)) return token;
            // lex_one reported an error and skipped the offending input
        }
    }

    // Produces the next token, or returns false after consuming bad input.
    bool lex_one(Token& out) {
        skip_trivia();
        if (eof()) {
            out = {Tok::End, "", 0, here(0)};
            return true;
        }

        const SourceSpan start = here();
        const char c = peek();

        if (ident_start(c)) {
            std::string text = lex_ident_text();
            // The status literal `not-applicable` is the one hyphenated word
            // in the grammar.
            if (text == "not" && peek() == '-') {
                const std::size_t mark = pos_;
                const int mark_line = line_, mark_col = column_;
                advance();
                std::string rest = lex_ident_text();
                if (rest == "applicable") {
                    text = "not-applicable";
                } else {
                    pos_ = mark;
                    line_ = mark_line;
                    column_ = mark_col;
                }
            }
            SourceSpan span = start;
            span.length = static_cast<int>(text.size());
            out = {Tok::Ident, std::move(text), 0, span};
            return true;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
                digits.push_back(advance());
            SourceSpan span = start;
            span.length = static_cast<int>(digits.size());
            long long value = 0;
            for (char d : digits) {
                value = value * 10 + (d - '0');
                if (value > 1'000'000'000) {
                    error(span, "integer literal too large");
                    value = 0;
                    break;
                }
            }
            out = {Tok::Int, std::move(digits), value, span};
            return true;
        }

        if (c == '"') {
            out = lex_string(start);
            return true;
        }

        advance();
        switch (c) {
        case '{': out = {Tok::LBrace, "{", 0, start}; return true;
        case '}': out = {Tok::RBrace, "}", 0, start}; return true;
        case '[': out = {Tok::LBracket, "[", 0, start}; return true;
        case ']': out = {Tok::RBracket, "]", 0, start}; return true;
        case ',': out = {Tok::Comma, ",", 0, start}; return true;
        case '.': out = {Tok::Dot, ".", 0, start}; return true;
        case '-':
            if (peek() == '>') {
                advance();
                SourceSpan span = start;
                span.length = 2;
                out = {Tok::Arrow, "->", 0, span};
                return true;
            }
            error(start, "stray '-' (expected '->')", {"'->'"});
            return false;
        default:
            error(start, std::string("unexpected character '") + c + "'");
            return false;
        }
    }

    Token lex_string(SourceSpan start) {
        advance(); // opening quote
        std::string value;
        while (true) {
            if (eof() || peek() == '\n') {
                error(start, "unterminated string literal");
                break;
            }
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (eof()) {
                    error(start, "unterminated string literal");
                    break;
                }
                char esc = advance();
                if (esc == '"' || esc == '\\') {
                    value.push_back(esc);
                } else {
                    SourceSpan span = here(2);
                    span.column -= 2;
                    error(span, std::string("invalid escape '\\") + esc + "'",
                          {"'\\\"'", "'\\\\'"});
                }
                continue;
            }
            value.push_back(c);
        }
        SourceSpan span = start;
        span.length = column_ - start.column; // strings never span lines
        return {Tok::String, std::move(value), 0, span};
    }
};

// Thrown inside an item to synchronize at the next top-level declaration.
struct SyncToItem {};

bool is_item_keyword(const std::string& text) {
    return text == "stakeholder" || text == "requirement" || text == "contract" ||
           text == "flow" || text == "attribute" || text == "article";
}

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<ParseError>& errors)
        : tokens_(std::move(tokens)), errors_(errors) {}

    SpecDocument run() {
        SpecDocument doc;
        if (!at_ident("spec")) {
            error(peek().span, "expected 'spec' header", {"spec"});
            return doc;
        }
        doc.span = peek().span;
        advance();
        try {
            doc.name = expect_string("spec name");
            expect_keyword("version");
            doc.version = expect_int("spec version");
        } catch (const SyncToItem&) {
            synchronize();
        }

        while (peek().kind != Tok::End) {
            try {
                parse_item(doc);
            } catch (const SyncToItem&) {
                synchronize();
            }
        }
        return doc;
    }

private:
    std::vector<Token> tokens_;
    std::vector<ParseError>& errors_;
    std::size_t pos_ = 0;

    std::map<std::string, SourceSpan> stakeholder_ids_;
    std::map<std::string, SourceSpan> requirement_ids_;
    std::map<std::string, SourceSpan> contract_ids_;

    const Token& peek() const { return tokens_[pos_]; }

    const Token& advance() {
        const Token& current = tokens_[pos_];
        if (pos_ + 1 < tokens_.size()) ++pos_; // never moves past End
        return current;
    }

    bool at_ident(const char* text) const {
        return peek().kind == Tok::Ident && peek().text == text;
    }

    void error(const SourceSpan& span, std::string message,
               std::vector<std::string> expected = {}) {
        errors_.push_back({span, std::move(message), std::move(expected)});
    }

    [[noreturn]] void fail(std::string message, std::vector<std::string> expected = {}) {
        error(peek().span, std::move(message), std::move(expected));
        throw SyncToItem{};
    }

    void synchronize() {
        while (peek().kind != Tok::End) {
            if (peek().kind == Tok::Ident && is_item_keyword(peek().text)) return;
            advance();
        }
    }

    void expect_keyword(const char* keyword) {
        if (!at_ident(keyword))
            fail(std::string("expected '") + keyword + "', found " + describe(peek()),
                 {keyword});
        advance();
    }

    std::string expect_ident(const std::string& what) {
        if (peek().kind != Tok::Ident)
            fail("expected " + what + ", found " + describe(peek()), {"identifier"});
        return advance().text;
    }

    std::string expect_string(const std::string& what) {
        if (peek().kind != Tok::String)
            fail("expected " + what + " (string), found " + describe(peek()), {"string"});
        return advance().text;
    }

    int expect_int(const std::string& what) {
        if (peek().kind != Tok::Int)
            fail("expected " + what + " (integer), found " + describe(peek()), {"integer"});
        return static_cast<int>(advance().number);
    }

    void expect_token(Tok kind) {
        if (peek().kind != kind)
            fail(std::string("expected ") + token_name(kind) + ", found " + describe(peek()),
                 {token_name(kind)});
        advance();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::Ident) return "'" + t.text + "'";
        if (t.kind == Tok::String) return "string";
        if (t.kind == Tok::Int) return "'" + t.text + "'";
        return token_name(t.kind);
    }

    void check_unique(std::map<std::string, SourceSpan>& ids, const std::string& kind,
                      const std::string& id, const SourceSpan& span) {
        auto [it, inserted] = ids.emplace(id, span);
        if (!inserted)
            error(span, "duplicate " + kind + " id '" + id + "'; first declared at " +
                            format_span(it->second));
    }

    void parse_item(SpecDocument& doc) {
        if (peek().kind != Tok::Ident)
            fail("expected declaration, found " + describe(peek()),
                 {"stakeholder", "requirement", "contract", "flow", "attribute", "article"});
        const std::string& kw = peek().text;
        if (kw == "stakeholder") {
            parse_stakeholder(doc);
        } else if (kw == "requirement") {
            parse_requirement(doc);
        } else if (kw == "contract") {
            parse_contract(doc);
        } else if (kw == "flow") {
            parse_flow(doc);
        } else if (kw == "attribute") {
            parse_attribute(doc);
        } else if (kw == "article") {
            parse_article(doc);
        } else {
            fail("unknown declaration '" + kw + "'",
                 {"stakeholder", "requirement", "contract", "flow", "attribute", "article"});
        }
    }

    void parse_stakeholder(SpecDocument& doc) {
        advance();
        StakeholderDecl decl;
        decl.span = peek().span;
        decl.id = expect_ident("stakeholder id");
        check_unique(stakeholder_ids_, "stakeholder", decl.id, decl.span);
        expect_keyword("role");
        decl.role = expect_string("stakeholder role");
        doc.stakeholders.push_back(std::move(decl));
    }

    void parse_requirement(SpecDocument& doc) {
        advance();
        RequirementDecl decl;
        decl.span = peek().span;
        decl.id = expect_ident("requirement id");
        check_unique(requirement_ids_, "requirement", decl.id, decl.span);
        expect_keyword("owner");
        decl.owner = expect_ident("owner stakeholder id");
        expect_keyword("status");
        const Token status = peek();
        const std::string text = expect_ident("requirement status");
        if (text == "attested") {
            decl.status = RequirementStatus::Attested;
        } else if (text == "open") {
            decl.status = RequirementStatus::Open;
        } else if (text == "not-applicable") {
            decl.status = RequirementStatus::NotApplicable;
        } else {
            error(status.span, "invalid status '" + text + "'",
                  {"attested", "open", "not-applicable"});
            throw SyncToItem{};
        }
        if (at_ident("text")) {
            advance();
            decl.text = expect_string("requirement text");
        }
        doc.requirements.push_back(std::move(decl));
    }

    void parse_contract(SpecDocument& doc) {
        advance();
        ContractDecl decl;
        decl.span = peek().span;
        decl.id = expect_ident("contract id");
        check_unique(contract_ids_, "contract", decl.id, decl.span);
        expect_keyword("owner");
        decl.owner = expect_ident("owner stakeholder id");
        expect_keyword("attribute");
        decl.attribute = expect_ident("quality attribute id");
        expect_token(Tok::LBrace);

        std::map<std::string, SourceSpan> clause_ids;
        while (peek().kind != Tok::RBrace) {
            if (at_ident("assume")) {
                parse_assume(decl, clause_ids);
            } else if (at_ident("guarantee")) {
                parse_guarantee(decl, clause_ids);
            } else {
                fail("expected clause in contract '" + decl.id + "', found " + describe(peek()),
                     {"assume", "guarantee", "'}'"});
            }
        }
        advance(); // '}'

        if (decl.guarantees.empty())
            error(decl.span, "contract '" + decl.id + "' declares no guarantee", {"guarantee"});
        doc.contracts.push_back(std::move(decl));
    }

    void parse_assume(ContractDecl& contract, std::map<std::string, SourceSpan>& clause_ids) {
        advance();
        AssumeClause clause;
        clause.span = peek().span;
        clause.id = expect_ident("assumption id");
        check_unique(clause_ids, "clause", clause.id, clause.span);
        clause.text = expect_string("assumption text");
        if (at_ident("discharged_by")) {
            advance();
            expect_token(Tok::LBracket);
            while (true) {
                clause.discharged_by.push_back(parse_ref());
                if (peek().kind != Tok::Comma) break;
                advance();
            }
            expect_token(Tok::RBracket);
        } else if (at_ident("accepted")) {
            advance();
            clause.accepted = true;
        }
        contract.assumptions.push_back(std::move(clause));
    }

    DischargeRef parse_ref() {
        DischargeRef ref;
        ref.span = peek().span;
        std::string first = expect_ident("discharge reference");
        if (peek().kind == Tok::Dot) {
            advance();
            ref.contract = std::move(first);
            ref.id = expect_ident("guarantee id");
            ref.span.length =
                static_cast<int>(ref.contract->size() + 1 + ref.id.size());
        } else {
            ref.id = std::move(first);
        }
        return ref;
    }

    void parse_guarantee(ContractDecl& contract, std::map<std::string, SourceSpan>& clause_ids) {
        advance();
        GuaranteeClause clause;
        clause.span = peek().span;
        clause.id = expect_ident("guarantee id");
        check_unique(clause_ids, "clause", clause.id, clause.span);
        clause.text = expect_string("guarantee text");
        contract.guarantees.push_back(std::move(clause));
    }

    void parse_flow(SpecDocument& doc) {
        advance();
        FlowDecl decl;
        decl.span = peek().span;
        decl.from = expect_ident("flow source stakeholder");
        expect_token(Tok::Arrow);
        decl.to = expect_ident("flow target stakeholder");
        expect_keyword("carries");
        expect_token(Tok::LBracket);
        while (true) {
            NameRef ref;
            ref.span = peek().span;
            ref.id = expect_ident("carried requirement id");
            decl.carries.push_back(std::move(ref));
            if (peek().kind != Tok::Comma) break;
            advance();
        }
        expect_token(Tok::RBracket);
        doc.flows.push_back(std::move(decl));
    }

    void parse_attribute(SpecDocument& doc) {
        advance();
        AttributeDecl decl;
        decl.span = peek().span;
        decl.id = expect_ident("characteristic id");
        expect_token(Tok::LBrace);
        while (peek().kind != Tok::RBrace) {
            if (!at_ident("sub"))
                fail("expected 'sub' in attribute '" + decl.id + "', found " + describe(peek()),
                     {"sub", "'}'"});
            advance();
            SubDecl s;
            s.span = peek().span;
            s.id = expect_ident("sub-characteristic id");
            if (at_ident("def")) {
                advance();
                s.definition = expect_string("definition");
            }
            if (at_ident("alias")) {
                advance();
                while (true) {
                    s.aliases.push_back(expect_string("alias"));
                    if (peek().kind != Tok::Comma) break;
                    advance();
                }
            }
            decl.subs.push_back(std::move(s));
        }
        advance(); // '}'
        doc.attributes.push_back(std::move(decl));
    }

    void parse_article(SpecDocument& doc) {
        advance();
        ArticleDecl decl;
        decl.span = peek().span;
        decl.article = expect_ident("article id");
        decl.title = expect_string("article title");
        expect_keyword("maps");
        expect_token(Tok::LBracket);
        while (true) {
            NameRef ref;
            ref.span = peek().span;
            ref.id = expect_ident("mapped attribute id");
            decl.maps.push_back(std::move(ref));
            if (peek().kind != Tok::Comma) break;
            advance();
        }
        expect_token(Tok::RBracket);
        doc.articles.push_back(std::move(decl));
    }
};

} // namespace

ParseResult parse(std::string_view source, const std::string& file) {
    ParseResult result;
    Lexer lexer(source, file, result.errors);
    std::vector<Token> tokens = lexer.run();
    Parser parser(std::move(tokens), result.errors);
    SpecDocument doc = parser.run();
    if (result.errors.empty())
        result.document = std::move(doc);
    return result;
}

} // namespace actcheck::csl
