#include "chow/expr.hpp"

#include <cctype>
#include <sstream>

namespace chow {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& input) : in_(input) {}

    ExprPtr run() {
        auto e = expr();
        skip_ws();
        if (pos_ != in_.size()) throw ParseError(pos_, "unexpected trailing input");
        return e;
    }

  private:
    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < in_.size() && in_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    ExprPtr expr() {
        Expr::Sum sum;
        int sign = 1;
        skip_ws();
        if (eat('+')) sign = 1;
        else if (eat('-')) sign = -1;
        sum.signs.push_back(sign);
        sum.terms.push_back(term());
        while (true) {
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
            sum.signs.push_back(sign);
            sum.terms.push_back(term());
        }
        if (sum.terms.size() == 1 && sum.signs[0] == 1) return sum.terms[0];
        auto e = std::make_shared<Expr>();
        e->node = std::move(sum);
        return e;
    }

    ExprPtr term() {
        Expr::Product prod;
        prod.factors.push_back(factor());
        while (eat('*')) prod.factors.push_back(factor());
        if (prod.factors.size() == 1) return prod.factors[0];
        auto e = std::make_shared<Expr>();
        e->node = std::move(prod);
        return e;
    }

    ExprPtr factor() {
        auto b = base();
        if (eat('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
                throw ParseError(at, "expected a natural number exponent");
            unsigned long exp = 0;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                exp = exp * 10 + static_cast<unsigned long>(in_[pos_] - '0');
                if (exp > 1000000) throw ParseError(at, "exponent too large");
                ++pos_;
            }
            auto e = std::make_shared<Expr>();
            e->node = Expr::Power{std::move(b), static_cast<unsigned>(exp)};
            return e;
        }
        return b;
    }

    ExprPtr base() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= in_.size()) throw ParseError(at, "unexpected end of input");
        char c = in_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            auto e = std::make_shared<Expr>();
            e->node = Expr::Paren{std::move(inner)};
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt value = 0;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
                value = value * 10 + (in_[pos_] - '0');
                ++pos_;
            }
            auto e = std::make_shared<Expr>();
            e->node = Expr::IntLit{std::move(value)};
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < in_.size() &&
                   (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_')) {
                name += in_[pos_];
                ++pos_;
            }
            auto e = std::make_shared<Expr>();
            e->node = Expr::Var{std::move(name)};
            return e;
        }
        throw ParseError(at, std::string("unexpected character '") + c + "'");
    }

    const std::string& in_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expression(const std::string& input) { return Parser(input).run(); }

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    if (auto* va = std::get_if<Expr::Var>(&a.node))
        return va->name == std::get<Expr::Var>(b.node).name;
    if (auto* ia = std::get_if<Expr::IntLit>(&a.node))
        return ia->value == std::get<Expr::IntLit>(b.node).value;
    if (auto* pa = std::get_if<Expr::Paren>(&a.node))
        return expr_equal(*pa->inner, *std::get<Expr::Paren>(b.node).inner);
    if (auto* wa = std::get_if<Expr::Power>(&a.node)) {
        const auto& wb = std::get<Expr::Power>(b.node);
        return wa->exponent == wb.exponent && expr_equal(*wa->base, *wb.base);
    }
    if (auto* ma = std::get_if<Expr::Product>(&a.node)) {
        const auto& mb = std::get<Expr::Product>(b.node);
        if (ma->factors.size() != mb.factors.size()) return false;
        for (std::size_t i = 0; i < ma->factors.size(); ++i)
            if (!expr_equal(*ma->factors[i], *mb.factors[i])) return false;
        return true;
    }
    const auto& sa = std::get<Expr::Sum>(a.node);
    const auto& sb = std::get<Expr::Sum>(b.node);
    if (sa.signs != sb.signs || sa.terms.size() != sb.terms.size()) return false;
    for (std::size_t i = 0; i < sa.terms.size(); ++i)
        if (!expr_equal(*sa.terms[i], *sb.terms[i])) return false;
    return true;
}

std::string print_expression(const Expr& e) {
    std::ostringstream os;
    if (auto* v = std::get_if<Expr::Var>(&e.node)) os << v->name;
    else if (auto* i = std::get_if<Expr::IntLit>(&e.node)) os << i->value.str();
    else if (auto* p = std::get_if<Expr::Paren>(&e.node))
        os << "(" << print_expression(*p->inner) << ")";
    else if (auto* w = std::get_if<Expr::Power>(&e.node))
        os << print_expression(*w->base) << "^" << w->exponent;
    else if (auto* m = std::get_if<Expr::Product>(&e.node)) {
        for (std::size_t i = 0; i < m->factors.size(); ++i) {
            if (i) os << "*";
            os << print_expression(*m->factors[i]);
        }
    } else {
        const auto& s = std::get<Expr::Sum>(e.node);
        for (std::size_t i = 0; i < s.terms.size(); ++i) {
            if (i == 0) {
                if (s.signs[0] < 0) os << "-";
            } else {
                os << (s.signs[i] < 0 ? " - " : " + ");
            }
            os << print_expression(*s.terms[i]);
        }
    }
    return os.str();
}

std::vector<int> parse_ambient(const std::string& input) {
    std::vector<int> dims;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < input.size() && std::isspace(static_cast<unsigned char>(input[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= input.size() || (input[pos] != 'P' && input[pos] != 'p'))
            throw ParseError(pos, "expected 'P<n>' in the ambient declaration");
        ++pos;
        if (pos >= input.size() || !std::isdigit(static_cast<unsigned char>(input[pos])))
            throw ParseError(pos, "expected a dimension after 'P'");
        int n = 0;
        while (pos < input.size() && std::isdigit(static_cast<unsigned char>(input[pos]))) {
            n = n * 10 + (input[pos] - '0');
            if (n > 64) throw ParseError(pos, "projective factor dimension too large");
            ++pos;
        }
        dims.push_back(n);
        skip_ws();
        if (pos >= input.size()) break;
        if (input[pos] != 'x' && input[pos] != 'X')
            throw ParseError(pos, "expected 'x' between projective factors");
        ++pos;
    }
    return dims;
}

PolyZ evaluate(const Expr& e, const RingSpecPtr& spec) {
    if (auto* v = std::get_if<Expr::Var>(&e.node)) {
        auto idx = spec->find_variable(v->name);
        if (!idx) throw Error("unbound variable: " + v->name);
        return PolyZ::variable(spec, *idx);
    }
    if (auto* i = std::get_if<Expr::IntLit>(&e.node)) return PolyZ::constant(spec, i->value);
    if (auto* p = std::get_if<Expr::Paren>(&e.node)) return evaluate(*p->inner, spec);
    if (auto* w = std::get_if<Expr::Power>(&e.node)) return evaluate(*w->base, spec).pow(w->exponent);
    if (auto* m = std::get_if<Expr::Product>(&e.node)) {
        PolyZ acc = PolyZ::one(spec);
        for (const auto& f : m->factors) acc *= evaluate(*f, spec);
        return acc;
    }
    const auto& s = std::get<Expr::Sum>(e.node);
    PolyZ acc = PolyZ::zero(spec);
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        PolyZ t = evaluate(*s.terms[i], spec);
        acc = s.signs[i] < 0 ? acc - t : acc + t;
    }
    return acc;
}

} // namespace chow
