#include "dproc/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace dproc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message) {}

namespace {

std::optional<ActivityId> to_activity_id(std::string_view s) {
    ActivityId v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

// ---------------------------------------------------------------------------
// Process files

struct Word {
    std::string text;
    std::size_t column;
    bool quoted = false;
};

std::vector<Word> split_words(std::string_view line, std::size_t line_no) {
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < line.size()) {
        const char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            Word w{"", i + 1, true};
            ++i;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    w.text += line[i + 1];
                    i += 2;
                } else if (line[i] == '"') {
                    ++i;
                    closed = true;
                    break;
                } else {
                    w.text += line[i++];
                }
            }
            if (!closed)
                throw ParseError(line_no, w.column, "unterminated string");
            words.push_back(std::move(w));
        } else {
            Word w{"", i + 1};
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
                   line[i] != '#' && line[i] != '"')
                w.text += line[i++];
            words.push_back(std::move(w));
        }
    }
    return words;
}

ActivityId expect_id(const Word &w, std::size_t line_no) {
    auto id = w.quoted ? std::nullopt : to_activity_id(w.text);
    if (!id)
        throw ParseError(line_no, w.column, "expected an activity id, got '" + w.text + "'");
    return *id;
}

struct PendingConstraint {
    std::size_t line;
    Word head;
    std::vector<std::pair<ActivityId, std::size_t>> ids; // id, column
    ConstraintKind kind;
};

std::string escape_label(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

DeclarativeProcess parse_process(std::string_view text) {
    std::optional<std::string> name;
    std::vector<Activity> activities;
    std::vector<std::size_t> activity_lines;
    std::vector<PendingConstraint> pending;

    auto declare = [&](Activity a, std::size_t line_no, std::size_t column) {
        auto clash = std::find_if(activities.begin(), activities.end(),
                                  [&](const Activity &b) { return b.id == a.id; });
        if (clash != activities.end())
            throw ParseError(line_no, column, "activity " + std::to_string(a.id) +
                                                  " already declared on line " +
                                                  std::to_string(activity_lines[clash - activities.begin()]));
        activities.push_back(std::move(a));
        activity_lines.push_back(line_no);
    };

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        auto words = split_words(line, line_no);
        if (words.empty())
            continue;
        const Word &head = words.front();
        const std::size_t argc = words.size() - 1;

        if (head.text == "process" && !head.quoted) {
            if (name)
                throw ParseError(line_no, head.column, "duplicate process declaration");
            if (argc == 0)
                throw ParseError(line_no, head.column, "process declaration needs a name");
            std::string n;
            for (std::size_t i = 1; i < words.size(); ++i)
                n += (i > 1 ? " " : "") + words[i].text;
            name = std::move(n);
        } else if (head.text == "activities" && !head.quoted) {
            if (argc != 1)
                throw ParseError(line_no, head.column, "'activities' takes a single count");
            const ActivityId n = expect_id(words[1], line_no);
            for (ActivityId id = 1; id <= n; ++id)
                declare({id, std::nullopt}, line_no, words[1].column);
        } else if (head.text == "activity" && !head.quoted) {
            if (argc < 1 || argc > 2)
                throw ParseError(line_no, head.column, "'activity' takes an id and an optional quoted label");
            Activity a{expect_id(words[1], line_no), std::nullopt};
            if (argc == 2) {
                if (!words[2].quoted)
                    throw ParseError(line_no, words[2].column, "activity label must be quoted");
                if (words[2].text.empty())
                    throw ParseError(line_no, words[2].column, "activity label is empty");
                a.label = words[2].text;
            }
            declare(std::move(a), line_no, words[1].column);
        } else {
            auto kind = head.quoted ? std::nullopt : constraint_kind_from_string(head.text);
            if (!kind)
                throw ParseError(line_no, head.column, "unknown constraint kind '" + head.text + "'");
            const bool ok = *kind == ConstraintKind::mustexist ? argc == 1
                            : *kind == ConstraintKind::orresp  ? argc >= 2
                                                               : argc == 2;
            if (!ok) {
                const char *expected = *kind == ConstraintKind::mustexist ? "1 activity"
                                       : *kind == ConstraintKind::orresp  ? "at least 2 activities"
                                                                          : "2 activities";
                throw ParseError(line_no, head.column,
                                 head.text + " expects " + expected + ", got " + std::to_string(argc));
            }
            PendingConstraint pc{line_no, head, {}, *kind};
            for (std::size_t i = 1; i < words.size(); ++i)
                pc.ids.emplace_back(expect_id(words[i], line_no), words[i].column);
            pending.push_back(std::move(pc));
        }
    }

    if (!name)
        throw ParseError(1, 1, "missing 'process' declaration");

    Alphabet alphabet(std::move(activities));
    std::vector<Constraint> constraints;
    for (const auto &pc : pending) {
        for (auto [id, column] : pc.ids)
            if (!alphabet.contains(id))
                throw ParseError(pc.line, column, "activity " + std::to_string(id) + " is not declared");
        std::vector<ActivityId> objects;
        for (std::size_t i = 1; i < pc.ids.size(); ++i)
            objects.push_back(pc.ids[i].first);
        try {
            constraints.emplace_back(pc.kind, pc.ids.front().first, std::move(objects));
        } catch (const ModelError &e) {
            throw ParseError(pc.line, pc.head.column, e.what());
        }
    }
    return DeclarativeProcess(std::move(*name), std::move(alphabet), std::move(constraints));
}

std::string serialize_process(const DeclarativeProcess &process) {
    std::ostringstream os;
    os << "process " << process.name() << '\n';
    const auto &acts = process.alphabet().activities();
    bool plain = true;
    for (std::size_t i = 0; i < acts.size(); ++i)
        plain = plain && acts[i].id == i + 1 && !acts[i].label;
    if (plain) {
        os << "activities " << acts.size() << '\n';
    } else {
        for (const auto &a : acts) {
            os << "activity " << a.id;
            if (a.label)
                os << " \"" << escape_label(*a.label) << '"';
            os << '\n';
        }
    }
    if (!process.constraints().empty())
        os << '\n';
    for (const auto &c : process.constraints()) {
        os << to_string(c.kind());
        for (ActivityId a : c.activities())
            os << ' ' << a;
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Stakeholder files

namespace {

enum class Tok { ident, number, lparen, rparen, comma, semi, assign, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token &t) {
    return t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    auto is_ident = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                advance();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Token t{Tok::number, "", line, col};
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                t.text += text[i];
                advance();
            }
            out.push_back(std::move(t));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            Token t{Tok::ident, "", line, col};
            while (i < text.size() && is_ident(text[i])) {
                t.text += text[i];
                advance();
            }
            out.push_back(std::move(t));
        } else if (c == ':' && i + 1 < text.size() && text[i + 1] == '=') {
            out.push_back({Tok::assign, ":=", line, col});
            advance();
            advance();
        } else {
            Tok k;
            switch (c) {
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case ',': k = Tok::comma; break;
            case ';': k = Tok::semi; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
            }
            out.push_back({k, std::string(1, c), line, col});
            advance();
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

bool is_keyword(const std::string &s) {
    return s == "and" || s == "or" || s == "not" || s == "contains" ||
           constraint_kind_from_string(s).has_value();
}

class ExprParser {
  public:
    explicit ExprParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    std::vector<Stakeholder> parse_file() {
        std::vector<Stakeholder> out;
        while (peek().kind != Tok::end) {
            const Token name = next();
            if (name.kind != Tok::ident || is_keyword(name.text))
                throw error(name, "expected a stakeholder name, got " + describe(name));
            expect(Tok::assign, "':='");
            if (std::any_of(out.begin(), out.end(), [&](const Stakeholder &s) { return s.name == name.text; }))
                throw error(name, "duplicate stakeholder '" + name.text + "'");
            auto expr = parse_expr();
            const Token &after = peek();
            const bool next_statement = after.kind == Tok::ident && !is_keyword(after.text) &&
                                        toks_[pos_ + 1].kind == Tok::assign;
            if (after.kind != Tok::end && !next_statement)
                throw error(after, "unexpected " + describe(after));
            out.push_back({name.text, std::move(expr)});
        }
        return out;
    }

  private:
    const Token &peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    static ParseError error(const Token &t, const std::string &msg) {
        return ParseError(t.line, t.column, msg);
    }

    Token expect(Tok kind, const char *what) {
        Token t = next();
        if (t.kind != kind)
            throw error(t, std::string("expected ") + what + ", got " + describe(t));
        return t;
    }

    bool accept_word(const char *word) {
        if (peek().kind == Tok::ident && peek().text == word) {
            ++pos_;
            return true;
        }
        return false;
    }

    PreferenceExpr parse_expr() {
        std::vector<PreferenceExpr> terms;
        terms.push_back(parse_term());
        while (accept_word("or"))
            terms.push_back(parse_term());
        return PreferenceExpr::any_of(std::move(terms));
    }

    PreferenceExpr parse_term() {
        std::vector<PreferenceExpr> factors;
        factors.push_back(parse_factor());
        while (accept_word("and"))
            factors.push_back(parse_factor());
        return PreferenceExpr::all_of(std::move(factors));
    }

    PreferenceExpr parse_factor() {
        if (accept_word("not"))
            return PreferenceExpr::negate(parse_factor());
        if (peek().kind == Tok::lparen) {
            ++pos_;
            auto e = parse_expr();
            expect(Tok::rparen, "')'");
            return e;
        }
        return parse_atom();
    }

    ActivityId parse_id() {
        Token t = expect(Tok::number, "an activity id");
        auto id = to_activity_id(t.text);
        if (!id)
            throw error(t, "activity id out of range: " + t.text);
        return *id;
    }

    PreferenceExpr parse_atom() {
        const Token head = next();
        if (head.kind != Tok::ident)
            throw error(head, "expected an atom, got " + describe(head));
        std::optional<ConstraintKind> kind =
            head.text == "contains" ? std::optional(ConstraintKind::mustexist) : constraint_kind_from_string(head.text);
        if (!kind)
            throw error(head, "expected an atom, got " + describe(head));
        expect(Tok::lparen, "'('");
        const ActivityId subject = parse_id();
        std::vector<ActivityId> objects;
        switch (*kind) {
        case ConstraintKind::mustexist:
            break;
        case ConstraintKind::orresp:
            expect(Tok::semi, "';'");
            objects.push_back(parse_id());
            while (peek().kind == Tok::comma) {
                ++pos_;
                objects.push_back(parse_id());
            }
            break;
        default:
            expect(Tok::comma, "','");
            objects.push_back(parse_id());
        }
        expect(Tok::rparen, "')'");
        try {
            return PreferenceExpr::atom(Constraint(*kind, subject, std::move(objects)));
        } catch (const ModelError &e) {
            throw error(head, e.what());
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void write_atom(std::ostream &os, const Constraint &c) {
    if (c.kind() == ConstraintKind::mustexist) {
        os << "contains(" << c.subject() << ')';
        return;
    }
    os << to_string(c.kind()) << '(' << c.subject();
    if (c.kind() == ConstraintKind::orresp) {
        os << ';';
        for (std::size_t i = 0; i < c.objects().size(); ++i)
            os << (i ? "," : "") << c.objects()[i];
    } else {
        os << ',' << c.object();
    }
    os << ')';
}

void write_expr(std::ostream &os, const PreferenceExpr &e) {
    using Op = PreferenceExpr::Op;
    auto child = [&os](const PreferenceExpr &c, bool wrap) {
        if (wrap)
            os << '(';
        write_expr(os, c);
        if (wrap)
            os << ')';
    };
    switch (e.op()) {
    case Op::atom:
        write_atom(os, e.constraint());
        break;
    case Op::negate:
        os << "not ";
        child(e.children().front(), e.children().front().op() == Op::all_of ||
                                        e.children().front().op() == Op::any_of);
        break;
    case Op::all_of:
    case Op::any_of: {
        const bool is_and = e.op() == Op::all_of;
        for (std::size_t i = 0; i < e.children().size(); ++i) {
            const auto &c = e.children()[i];
            os << (i == 0 ? "" : is_and ? " and " : " or ");
            child(c, c.op() == Op::any_of || (is_and && c.op() == Op::all_of));
        }
        break;
    }
    }
}

} // namespace

std::vector<Stakeholder> parse_stakeholders(std::string_view text) {
    return ExprParser(lex(text)).parse_file();
}

std::string serialize_expr(const PreferenceExpr &expr) {
    std::ostringstream os;
    write_expr(os, expr);
    return os.str();
}

std::string serialize_stakeholders(std::span<const Stakeholder> stakeholders) {
    std::ostringstream os;
    for (const auto &s : stakeholders)
        os << s.name << " := " << serialize_expr(s.expr) << '\n';
    return os.str();
}

} // namespace dproc
