#include "superspherical/expression.hpp"

#include <cctype>
#include <sstream>

namespace superspherical {

ParseError::ParseError(const std::string &message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position)
{
}

bool operator==(const Expr &a, const Expr &b)
{
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent && a.args == b.args;
}

const std::set<std::string> &gl12_names()
{
    static const std::set<std::string> names{"z", "k", "k1", "k2", "e'", "f'", "p", "e", "f"};
    return names;
}

namespace {

struct Token {
    enum class Kind { number, name, op, end };
    Kind kind = Kind::end;
    std::string text;
    std::size_t position = 0;
};

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
            ++j;
        }
        return j;
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = digits(i);
            if (j < src.size() && src[j] == '/') {
                const std::size_t k = digits(j + 1);
                if (k == j + 1) {
                    throw ParseError("expected a denominator", j + 1);
                }
                j = k;
            }
            out.push_back({Token::Kind::number, std::string(src.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            while (j < src.size() && src[j] == '\'') {
                ++j;
            }
            out.push_back({Token::Kind::name, std::string(src.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (std::string_view("+-*^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::op, std::string(1, c), i});
            ++i;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({Token::Kind::end, "", src.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const std::set<std::string> &names) : tokens_(std::move(tokens)), names_(names)
    {
    }

    Expr parse_all()
    {
        Expr e = expr();
        if (peek().kind != Token::Kind::end) {
            throw ParseError("unexpected '" + peek().text + "'", peek().position);
        }
        return e;
    }

private:
    const Token &peek() const { return tokens_[pos_]; }
    bool at_op(char c) const { return peek().kind == Token::Kind::op && peek().text[0] == c; }
    Token take() { return tokens_[pos_++]; }

    Expr expr()
    {
        Expr left = term();
        while (at_op('+') || at_op('-')) {
            const Token op = take();
            Expr node;
            node.kind = op.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
            node.position = left.position;
            node.args.push_back(std::move(left));
            node.args.push_back(term());
            left = std::move(node);
        }
        return left;
    }

    Expr term()
    {
        Expr left = unary();
        while (at_op('*')) {
            take();
            Expr node;
            node.kind = Expr::Kind::mul;
            node.position = left.position;
            node.args.push_back(std::move(left));
            node.args.push_back(unary());
            left = std::move(node);
        }
        return left;
    }

    Expr unary()
    {
        if (at_op('-')) {
            const Token op = take();
            Expr node;
            node.kind = Expr::Kind::neg;
            node.position = op.position;
            node.args.push_back(unary());
            return node;
        }
        return power();
    }

    Expr power()
    {
        Expr base = atom();
        if (at_op('^')) {
            take();
            const Token t = peek();
            if (t.kind != Token::Kind::number || t.text.find('/') != std::string::npos) {
                throw ParseError("expected a nonnegative integer exponent", t.position);
            }
            take();
            Expr node;
            node.kind = Expr::Kind::pow;
            node.position = base.position;
            try {
                const unsigned long v = std::stoul(t.text);
                if (v > 1000) {
                    throw ParseError("exponent too large", t.position);
                }
                node.exponent = static_cast<unsigned>(v);
            } catch (const std::out_of_range &) {
                throw ParseError("exponent too large", t.position);
            }
            node.args.push_back(std::move(base));
            return node;
        }
        return base;
    }

    Expr atom()
    {
        const Token t = peek();
        Expr node;
        node.position = t.position;
        switch (t.kind) {
        case Token::Kind::number:
            take();
            node.kind = Expr::Kind::scalar;
            try {
                node.value = parse_scalar(t.text);
            } catch (const std::invalid_argument &) {
                throw ParseError("invalid number '" + t.text + "'", t.position);
            }
            return node;
        case Token::Kind::name:
            take();
            if (!names_.count(t.text)) {
                throw ParseError("unknown generator '" + t.text + "'", t.position);
            }
            node.kind = Expr::Kind::generator;
            node.name = t.text;
            return node;
        case Token::Kind::op:
            if (t.text == "(") {
                take();
                Expr inner = expr();
                if (!at_op(')')) {
                    throw ParseError("expected ')'", peek().position);
                }
                take();
                inner.position = t.position;
                return inner;
            }
            throw ParseError("expected an operand, found '" + t.text + "'", t.position);
        case Token::Kind::end:
            break;
        }
        throw ParseError("unexpected end of input", t.position);
    }

    std::vector<Token> tokens_;
    const std::set<std::string> &names_;
    std::size_t pos_ = 0;
};

int precedence(const Expr &e)
{
    switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
        return 1;
    case Expr::Kind::mul:
        return 2;
    case Expr::Kind::neg:
        return 3;
    case Expr::Kind::pow:
        return 4;
    case Expr::Kind::scalar:
        return e.value.get_den() == 1 ? 5 : 4;
    case Expr::Kind::generator:
        return 5;
    }
    return 5;
}

void print_into(std::ostringstream &os, const Expr &e, int min_prec)
{
    const bool parens = precedence(e) < min_prec;
    if (parens) {
        os << "(";
    }
    switch (e.kind) {
    case Expr::Kind::scalar:
        os << to_string(e.value);
        break;
    case Expr::Kind::generator:
        os << e.name;
        break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
        print_into(os, e.args[0], 1);
        os << (e.kind == Expr::Kind::add ? " + " : " - ");
        print_into(os, e.args[1], 2);
        break;
    case Expr::Kind::mul:
        print_into(os, e.args[0], 2);
        os << "*";
        print_into(os, e.args[1], 3);
        break;
    case Expr::Kind::neg:
        os << "-";
        print_into(os, e.args[0], 3);
        break;
    case Expr::Kind::pow:
        print_into(os, e.args[0], 5);
        os << "^" << e.exponent;
        break;
    }
    if (parens) {
        os << ")";
    }
}

} // namespace

Expr parse(std::string_view source, const std::set<std::string> &names)
{
    return Parser(lex(source), names).parse_all();
}

std::string print(const Expr &e)
{
    std::ostringstream os;
    print_into(os, e, 0);
    return os.str();
}

UElement elaborate(const Expr &e, const Enveloping &u)
{
    switch (e.kind) {
    case Expr::Kind::scalar:
        return u.scalar(e.value);
    case Expr::Kind::generator:
        return u.generator(e.name);
    case Expr::Kind::add:
        return elaborate(e.args[0], u) + elaborate(e.args[1], u);
    case Expr::Kind::sub:
        return elaborate(e.args[0], u) - elaborate(e.args[1], u);
    case Expr::Kind::mul:
        return u.multiply(elaborate(e.args[0], u), elaborate(e.args[1], u));
    case Expr::Kind::neg:
        return -elaborate(e.args[0], u);
    case Expr::Kind::pow:
        return u.power(elaborate(e.args[0], u), e.exponent);
    }
    return {};
}

} // namespace superspherical
