#pragma once

#include "chow/graded_poly.hpp"
#include "chow/numeric.hpp"
#include "chow/ring_spec.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace chow {

/// Parse failure with a 0-based position into the input.
class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Expression tree over variables, integer literals, +, -, *, ^ and
/// parentheses:
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := var | int | '(' expr ')'
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    struct Var { std::string name; };
    struct IntLit { BigInt value; };
    struct Paren { ExprPtr inner; };
    struct Power { ExprPtr base; unsigned exponent; };
    struct Product { std::vector<ExprPtr> factors; };
    struct Sum {
        std::vector<int> signs; // +1 / -1 per term, including the leading one
        std::vector<ExprPtr> terms;
    };

    std::variant<Var, IntLit, Paren, Power, Product, Sum> node;
};

bool expr_equal(const Expr& a, const Expr& b);

ExprPtr parse_expression(const std::string& input);

/// Canonical printer; parse(print(e)) reproduces the tree exactly.
std::string print_expression(const Expr& e);

/// "P4 x P5" -> {4, 5}
std::vector<int> parse_ambient(const std::string& input);

/// Evaluate over the integral Chow ring of the declared product of
/// projective spaces; unknown variables are an error.
PolyZ evaluate(const Expr& e, const RingSpecPtr& spec);

} // namespace chow
