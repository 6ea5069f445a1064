#include "qclab/expr.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <functional>

namespace qclab {

struct Expression::Node {
    enum Kind { Number, Variable, Unary, Binary, Call } kind;
    cpx value;
    std::string name;
    char op = 0;
    std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Node = Expression::Node;

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    explicit Parser(const std::string& src, const std::vector<std::string>& variables)
        : s(src), vars(variables) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw config_error("expression: " + msg + " at position " + std::to_string(pos) + " in '" +
                           s + "'");
    }

    NodePtr make_number(cpx v) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Number;
        n->value = v;
        return n;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) return lhs;
            char op = s[pos++];
            NodePtr rhs = parse_term();
            auto n = std::make_shared<Node>();
            n->kind = Node::Binary;
            n->op = op;
            n->lhs = lhs;
            n->rhs = rhs;
            lhs = n;
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (pos >= s.size() || (s[pos] != '*' && s[pos] != '/')) return lhs;
            char op = s[pos++];
            NodePtr rhs = parse_factor();
            auto n = std::make_shared<Node>();
            n->kind = Node::Binary;
            n->op = op;
            n->lhs = lhs;
            n->rhs = rhs;
            lhs = n;
        }
    }

    NodePtr parse_factor() {
        NodePtr base = parse_unary();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            NodePtr exp = parse_factor();  // right associative
            auto n = std::make_shared<Node>();
            n->kind = Node::Binary;
            n->op = '^';
            n->lhs = base;
            n->rhs = exp;
            return n;
        }
        return base;
    }

    NodePtr parse_unary() {
        skip_ws();
        if (eat('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Unary;
            n->op = '-';
            n->lhs = parse_unary();
            return n;
        }
        if (eat('+')) return parse_unary();
        return parse_primary();
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            NodePtr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t end = 0;
            double v = std::stod(s.substr(pos), &end);
            pos += end;
            return make_number(cpx(v, 0.0));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            skip_ws();
            if (pos < s.size() && s[pos] == '(') {
                ++pos;
                NodePtr arg = parse_expr();
                if (!eat(')')) fail("expected ')' after argument of " + name);
                static const char* fns[] = {"sin", "cos", "tan", "exp", "log", "sqrt",
                                            "abs", "re",  "im",  "conj", "arg"};
                bool known = false;
                for (const char* f : fns) known |= name == f;
                if (!known) fail("unknown function '" + name + "'");
                auto n = std::make_shared<Node>();
                n->kind = Node::Call;
                n->name = name;
                n->lhs = arg;
                return n;
            }
            if (name == "i") return make_number(cpx(0.0, 1.0));
            if (name == "pi") return make_number(cpx(M_PI, 0.0));
            if (name == "e") return make_number(cpx(M_E, 0.0));
            for (const std::string& v : vars) {
                if (name == v) {
                    auto n = std::make_shared<Node>();
                    n->kind = Node::Variable;
                    n->name = name;
                    return n;
                }
            }
            fail("unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

cpx eval_node(const Node& n, const std::map<std::string, cpx>& env) {
    switch (n.kind) {
        case Node::Number:
            return n.value;
        case Node::Variable: {
            auto it = env.find(n.name);
            if (it == env.end()) throw numeric_error("expression: unbound variable " + n.name);
            return it->second;
        }
        case Node::Unary:
            return -eval_node(*n.lhs, env);
        case Node::Binary: {
            cpx a = eval_node(*n.lhs, env);
            cpx b = eval_node(*n.rhs, env);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                case '^': return std::pow(a, b);
            }
            throw numeric_error("expression: bad operator");
        }
        case Node::Call: {
            cpx a = eval_node(*n.lhs, env);
            if (n.name == "sin") return std::sin(a);
            if (n.name == "cos") return std::cos(a);
            if (n.name == "tan") return std::tan(a);
            if (n.name == "exp") return std::exp(a);
            if (n.name == "log") return std::log(a);
            if (n.name == "sqrt") return std::sqrt(a);
            if (n.name == "abs") return cpx(std::abs(a), 0.0);
            if (n.name == "re") return cpx(a.real(), 0.0);
            if (n.name == "im") return cpx(a.imag(), 0.0);
            if (n.name == "conj") return std::conj(a);
            if (n.name == "arg") return cpx(std::arg(a), 0.0);
            throw numeric_error("expression: bad function");
        }
    }
    throw numeric_error("expression: bad node");
}

}  // namespace

Expression Expression::parse(const std::string& src, const std::vector<std::string>& variables) {
    Parser p(src, variables);
    NodePtr root = p.parse_expr();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("trailing input");
    Expression e;
    e.root_ = root;
    e.src_ = src;
    return e;
}

cpx Expression::eval(const std::map<std::string, cpx>& env) const {
    if (!root_) throw numeric_error("expression: empty");
    return eval_node(*root_, env);
}

}  // namespace qclab
