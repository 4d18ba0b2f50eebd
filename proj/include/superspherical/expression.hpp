#pragma once

#include "superspherical/enveloping.hpp"
#include "superspherical/scalar.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace superspherical {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string &message, std::size_t position);
    // 0-based offset into the source.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Expr {
    enum class Kind { scalar, generator, add, sub, mul, neg, pow };

    Kind kind = Kind::scalar;
    Scalar value;             // scalar
    std::string name;         // generator
    unsigned exponent = 0;    // pow
    std::vector<Expr> args;   // operands
    std::size_t position = 0; // where the node starts in the source

    // Structural equality; positions are ignored.
    friend bool operator==(const Expr &a, const Expr &b);
};

// Generator names of the gl(1|2) pair: z k k1 k2 e' f' p e f.
const std::set<std::string> &gl12_names();

// Grammar, loosest first:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' integer)?
//   atom  := number ('/' number)? | name | '(' expr ')'
// A literal "p/q" is a single token. Throws ParseError.
Expr parse(std::string_view source, const std::set<std::string> &names = gl12_names());

// Canonical text; parse(print(e)) == e.
std::string print(const Expr &e);

// Evaluates in U(g); names are looked up among the generators. Odd powers
// such as e^2 are legal and normalize through the odd-square rule.
UElement elaborate(const Expr &e, const Enveloping &u);

} // namespace superspherical
