#include <lpbn/program.h>

#include <cctype>

namespace lpbn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what)
    , line_(line)
    , column_(column) {}

namespace {
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Program run() {
        Program prg;
        for (skipBlank(); !atEnd(); skipBlank()) {
            parseRule(prg);
        }
        return prg;
    }

private:
    [[nodiscard]] bool atEnd() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return atEnd() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_++] == '\n') {
            ++line_;
            col_ = 1;
        }
        else {
            ++col_;
        }
    }

    void skipBlank() {
        while (!atEnd()) {
            char c = peek();
            if (c == '%') {
                while (!atEnd() && peek() != '\n') {
                    advance();
                }
            }
            else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            }
            else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col_, what); }

    static bool identStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool identChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string_view identifier() {
        if (!identStart(peek())) {
            fail("expected atom");
        }
        auto start = pos_;
        while (!atEnd() && identChar(peek())) {
            advance();
        }
        return text_.substr(start, pos_ - start);
    }

    void expect(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) {
            fail("expected '" + std::string(token) + "'");
        }
        for (std::size_t k = 0; k < token.size(); ++k) {
            advance();
        }
    }

    void parseRule(Program& prg) {
        Rule rule;
        rule.head = prg.addAtom(identifier());
        skipBlank();
        if (peek() == ':') {
            expect(":-");
            do {
                skipBlank();
                parseLiteral(prg, rule);
                skipBlank();
            } while (peek() == ',' && (advance(), true));
        }
        expect(".");
        prg.addRule(std::move(rule));
    }

    void parseLiteral(Program& prg, Rule& rule) {
        auto name = identifier();
        if (name == "not") {
            // "not" followed by whitespace and an atom negates it; otherwise
            // it is an ordinary atom named "not".
            auto before = pos_;
            skipBlank();
            if (pos_ > before && identStart(peek())) {
                rule.nbody.push_back(prg.addAtom(identifier()));
                return;
            }
        }
        rule.pbody.push_back(prg.addAtom(name));
    }

    std::string_view text_;
    std::size_t      pos_  = 0;
    std::size_t      line_ = 1;
    std::size_t      col_  = 1;
};
} // namespace

Program parseProgram(std::string_view text) { return Parser(text).run(); }

} // namespace lpbn
