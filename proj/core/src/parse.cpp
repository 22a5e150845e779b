#include "sre/parse.hpp"

#include <algorithm>
#include <cctype>

#include "sre/errors.hpp"

namespace sre {

namespace {

enum class Tok { Symbol, Eps, Empty, Shuffle, Union, Dot, Star, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        std::size_t start = pos_;
        if (pos_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = text_[pos_];
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            current_ = {Tok::Symbol, std::string(text_.substr(start, pos_ - start)), start};
            return;
        }
        ++pos_;
        switch (c) {
        case '@': current_ = {Tok::Eps, "@", start}; return;
        case '$': current_ = {Tok::Empty, "$", start}; return;
        case '#': current_ = {Tok::Shuffle, "#", start}; return;
        case '+': current_ = {Tok::Union, "+", start}; return;
        case '.': current_ = {Tok::Dot, ".", start}; return;
        case '*': current_ = {Tok::Star, "*", start}; return;
        case '(': current_ = {Tok::LParen, "(", start}; return;
        case ')': current_ = {Tok::RParen, ")", start}; return;
        default:
            throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{Tok::End, "", 0};
};

// union := shuffle ('+' shuffle)*
// shuffle := concat ('#' concat)*
// concat := starred (('.')? starred)*     juxtaposition concatenates
// starred := atom '*'*
// atom := SYMBOL | '@' | '(' union ')'
class Parser {
public:
    Parser(ExprPool& pool, std::string_view text) : pool_(pool), lexer_(text) {}

    Expr parse_top() {
        if (lexer_.peek().kind == Tok::Empty) {
            Token t = lexer_.take();
            expect_end();
            (void)t;
            return pool_.empty();
        }
        Expr e = parse_union();
        expect_end();
        return e;
    }

private:
    void expect_end() {
        const Token& t = lexer_.peek();
        if (t.kind != Tok::End) {
            throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    Expr parse_union() {
        Expr e = parse_shuffle();
        while (lexer_.peek().kind == Tok::Union) {
            lexer_.take();
            e = pool_.make_union(e, parse_shuffle());
        }
        return e;
    }

    Expr parse_shuffle() {
        Expr e = parse_concat();
        while (lexer_.peek().kind == Tok::Shuffle) {
            lexer_.take();
            e = pool_.make_shuffle(e, parse_concat());
        }
        return e;
    }

    static bool starts_atom(Tok k) {
        return k == Tok::Symbol || k == Tok::Eps || k == Tok::Empty || k == Tok::LParen;
    }

    Expr parse_concat() {
        Expr e = parse_starred();
        for (;;) {
            Tok k = lexer_.peek().kind;
            if (k == Tok::Dot) {
                lexer_.take();
                e = pool_.make_concat(e, parse_starred());
            } else if (starts_atom(k)) {
                e = pool_.make_concat(e, parse_starred());
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_starred() {
        Expr e = parse_atom();
        while (lexer_.peek().kind == Tok::Star) {
            lexer_.take();
            e = pool_.make_star(e);
        }
        return e;
    }

    Expr parse_atom() {
        Token t = lexer_.take();
        switch (t.kind) {
        case Tok::Symbol: {
            auto index = pool_.alphabet().index_of(t.text);
            if (!index) {
                throw ParseError("unknown symbol '" + t.text + "'", t.pos);
            }
            return pool_.sym(*index);
        }
        case Tok::Eps:
            return pool_.eps();
        case Tok::Empty:
            throw ParseError("'$' denotes the empty set and is only allowed as a whole expression",
                             t.pos);
        case Tok::LParen: {
            Expr e = parse_union();
            Token close = lexer_.take();
            if (close.kind != Tok::RParen) {
                throw ParseError("expected ')'", close.pos);
            }
            return e;
        }
        default:
            throw ParseError("expected an expression, found '" +
                                 (t.kind == Tok::End ? std::string("end of input") : t.text) + "'",
                             t.pos);
        }
    }

    ExprPool& pool_;
    Lexer lexer_;
};

int precedence(ExprKind k) {
    switch (k) {
    case ExprKind::Union: return 1;
    case ExprKind::Shuffle: return 2;
    case ExprKind::Concat: return 3;
    case ExprKind::Star: return 4;
    default: return 5; // atoms
    }
}

void print_expr(Expr e, std::string& out, int parent_level, bool right_child) {
    int level = precedence(e.kind());
    // Left-associative binaries: a right child at the same level needs parens.
    bool parens = level < parent_level || (level == parent_level && right_child && level <= 3);
    if (parens) out += '(';
    switch (e.kind()) {
    case ExprKind::Empty: out += '$'; break;
    case ExprKind::Eps: out += '@'; break;
    case ExprKind::Sym: out += e.alphabet().at(e.symbol_index()).name; break;
    case ExprKind::Union:
        print_expr(e.left(), out, level, false);
        out += " + ";
        print_expr(e.right(), out, level, true);
        break;
    case ExprKind::Shuffle:
        print_expr(e.left(), out, level, false);
        out += " # ";
        print_expr(e.right(), out, level, true);
        break;
    case ExprKind::Concat:
        print_expr(e.left(), out, level, false);
        out += " . ";
        print_expr(e.right(), out, level, true);
        break;
    case ExprKind::Star:
        print_expr(e.left(), out, level, false);
        out += '*';
        break;
    }
    if (parens) out += ')';
}

void print_tree(Expr e, std::string& out) {
    switch (e.kind()) {
    case ExprKind::Empty: out += "empty"; break;
    case ExprKind::Eps: out += "eps"; break;
    case ExprKind::Sym: out += e.alphabet().at(e.symbol_index()).name; break;
    case ExprKind::Union:
    case ExprKind::Concat:
    case ExprKind::Shuffle:
        out += e.is(ExprKind::Union) ? "union(" : e.is(ExprKind::Concat) ? "concat(" : "shuffle(";
        print_tree(e.left(), out);
        out += ", ";
        print_tree(e.right(), out);
        out += ')';
        break;
    case ExprKind::Star:
        out += "star(";
        print_tree(e.left(), out);
        out += ')';
        break;
    }
}

} // namespace

Expr parse(ExprPool& pool, std::string_view text) {
    Parser parser(pool, text);
    return parser.parse_top();
}

std::string pretty_print(Expr e) {
    std::string out;
    print_expr(e, out, 0, false);
    return out;
}

std::string tree_string(Expr e) {
    std::string out;
    print_tree(e, out);
    return out;
}

std::vector<std::string> scan_symbol_names(std::string_view text) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c >= 'a' && c <= 'z') {
            std::size_t start = i++;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            names.emplace_back(text.substr(start, i - start));
        } else {
            ++i;
        }
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

} // namespace sre
