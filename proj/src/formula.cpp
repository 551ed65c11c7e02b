#include "logicnet/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace logicnet {

namespace {

bool is_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
        return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

const std::string& Formula::var_name() const {
    if (node_->kind != Kind::Var) {
        throw std::logic_error("var_name() on a non-variable node");
    }
    return node_->name;
}

Formula Formula::child() const {
    if (node_->kind != Kind::Not && node_->kind != Kind::Possibly) {
        throw std::logic_error("child() on a non-unary node");
    }
    return Formula(node_->a);
}

Formula Formula::left() const {
    if (!node_->b) throw std::logic_error("left() on a non-binary node");
    return Formula(node_->a);
}

Formula Formula::right() const {
    if (!node_->b) throw std::logic_error("right() on a non-binary node");
    return Formula(node_->b);
}

bool Formula::operator==(const Formula& other) const {
    const Node* x = node_.get();
    const Node* y = other.node_.get();
    if (x == y) return true;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case Kind::Var:
            return x->name == y->name;
        case Kind::Not:
        case Kind::Possibly:
            return Formula(x->a) == Formula(y->a);
        default:
            return Formula(x->a) == Formula(y->a) &&
                   Formula(x->b) == Formula(y->b);
    }
}

Formula var(std::string name) {
    if (!is_identifier(name)) {
        throw std::invalid_argument("variable name '" + name +
                                    "' is not an identifier");
    }
    return Formula(std::make_shared<const Formula::Node>(
        Formula::Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Formula neg(Formula f) {
    return Formula(std::make_shared<const Formula::Node>(
        Formula::Node{Kind::Not, {}, std::move(f.node_), nullptr}));
}

Formula conj(Formula a, Formula b) {
    return Formula(std::make_shared<const Formula::Node>(
        Formula::Node{Kind::And, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula disj(Formula a, Formula b) {
    return Formula(std::make_shared<const Formula::Node>(
        Formula::Node{Kind::Or, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula implies(Formula a, Formula b) {
    return Formula(std::make_shared<const Formula::Node>(Formula::Node{
        Kind::Implies, {}, std::move(a.node_), std::move(b.node_)}));
}

Formula possibly(Formula f) {
    return Formula(std::make_shared<const Formula::Node>(
        Formula::Node{Kind::Possibly, {}, std::move(f.node_), nullptr}));
}

namespace {

void collect_vars(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
        case Kind::Var:
            if (std::find(out.begin(), out.end(), f.var_name()) == out.end()) {
                out.push_back(f.var_name());
            }
            break;
        case Kind::Not:
        case Kind::Possibly:
            collect_vars(f.child(), out);
            break;
        default:
            collect_vars(f.left(), out);
            collect_vars(f.right(), out);
    }
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
    std::vector<std::string> out;
    collect_vars(f, out);
    return out;
}

std::size_t node_count(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
            return 1;
        case Kind::Not:
        case Kind::Possibly:
            return 1 + node_count(f.child());
        default:
            return 1 + node_count(f.left()) + node_count(f.right());
    }
}

int height(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
            return 0;
        case Kind::Not:
        case Kind::Possibly:
            return 1 + height(f.child());
        default:
            return 1 + std::max(height(f.left()), height(f.right()));
    }
}

namespace {

// Precedence levels for printing: Implies 0, Or 1, And 2, prefix 3.
int precedence(Kind k) {
    switch (k) {
        case Kind::Implies:
            return 0;
        case Kind::Or:
            return 1;
        case Kind::And:
            return 2;
        default:
            return 3;
    }
}

void print(const Formula& f, int min_prec, std::string& out) {
    const int prec = f.kind() == Kind::Var ? 4 : precedence(f.kind());
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (f.kind()) {
        case Kind::Var:
            out += f.var_name();
            break;
        case Kind::Not:
            out += '!';
            print(f.child(), 3, out);
            break;
        case Kind::Possibly:
            out += "<>";
            print(f.child(), 3, out);
            break;
        case Kind::And:
            print(f.left(), 2, out);
            out += " & ";
            print(f.right(), 3, out);
            break;
        case Kind::Or:
            print(f.left(), 1, out);
            out += " | ";
            print(f.right(), 2, out);
            break;
        case Kind::Implies:
            // Right-associative: only a left-nested implication needs parens.
            print(f.left(), 1, out);
            out += " -> ";
            print(f.right(), 0, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, 0, out);
    return out;
}

Formula strip_possibly(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
            return f;
        case Kind::Possibly:
            return strip_possibly(f.child());
        case Kind::Not:
            return neg(strip_possibly(f.child()));
        case Kind::And:
            return conj(strip_possibly(f.left()), strip_possibly(f.right()));
        case Kind::Or:
            return disj(strip_possibly(f.left()), strip_possibly(f.right()));
        case Kind::Implies:
            return implies(strip_possibly(f.left()),
                           strip_possibly(f.right()));
    }
    throw std::logic_error("unreachable");
}

Formula rewrite_implications(const Formula& f) {
    switch (f.kind()) {
        case Kind::Var:
            return f;
        case Kind::Possibly:
            return possibly(rewrite_implications(f.child()));
        case Kind::Not:
            return neg(rewrite_implications(f.child()));
        case Kind::And:
            return conj(rewrite_implications(f.left()),
                        rewrite_implications(f.right()));
        case Kind::Or:
            return disj(rewrite_implications(f.left()),
                        rewrite_implications(f.right()));
        case Kind::Implies:
            return disj(neg(rewrite_implications(f.left())),
                        rewrite_implications(f.right()));
    }
    throw std::logic_error("unreachable");
}

bool eval(const Formula& f, const Assignment& a) {
    switch (f.kind()) {
        case Kind::Var: {
            auto it = a.find(f.var_name());
            if (it == a.end()) {
                throw std::invalid_argument("assignment is missing variable '" +
                                            f.var_name() + "'");
            }
            return it->second;
        }
        case Kind::Not:
            return !eval(f.child(), a);
        case Kind::Possibly:
            return eval(f.child(), a);
        case Kind::And:
            return eval(f.left(), a) && eval(f.right(), a);
        case Kind::Or:
            return eval(f.left(), a) || eval(f.right(), a);
        case Kind::Implies:
            return !eval(f.left(), a) || eval(f.right(), a);
    }
    throw std::logic_error("unreachable");
}

std::uint8_t TruthTable::input_bit(std::size_t row, std::size_t variable) const {
    const std::size_t n = variables.size();
    const std::uint32_t value =
        static_cast<std::uint32_t>(rows() - 1 - row);
    return static_cast<std::uint8_t>((value >> (n - 1 - variable)) & 1u);
}

std::vector<std::uint8_t> TruthTable::row_bits(std::size_t row) const {
    std::vector<std::uint8_t> bits(variables.size());
    for (std::size_t i = 0; i < variables.size(); ++i) {
        bits[i] = input_bit(row, i);
    }
    return bits;
}

Assignment TruthTable::row_assignment(std::size_t row) const {
    Assignment a;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        a[variables[i]] = input_bit(row, i) != 0;
    }
    return a;
}

EvalProgram::EvalProgram(const Formula& f)
    : EvalProgram(f, free_variables(f)) {}

EvalProgram::EvalProgram(const Formula& f, std::vector<std::string> variables)
    : variables_(std::move(variables)) {
    if (variables_.size() > kMaxTableVariables) {
        throw std::invalid_argument("formula has too many variables");
    }
    const std::size_t n = variables_.size();
    std::size_t depth = 0;
    // Postfix emission; Implies becomes Not/Or, Possibly disappears.
    auto emit = [&](auto&& self, const Formula& g) -> void {
        switch (g.kind()) {
            case Kind::Var: {
                auto it = std::find(variables_.begin(), variables_.end(),
                                    g.var_name());
                if (it == variables_.end()) {
                    throw std::invalid_argument(
                        "variable '" + g.var_name() +
                        "' is not in the program's variable list");
                }
                const auto idx =
                    static_cast<std::size_t>(it - variables_.begin());
                code_.push_back(
                    {Op::Push, static_cast<std::uint8_t>(n - 1 - idx)});
                ++depth;
                stack_need_ = std::max(stack_need_, depth);
                break;
            }
            case Kind::Not:
                self(self, g.child());
                code_.push_back({Op::Not, 0});
                break;
            case Kind::Possibly:
                self(self, g.child());
                break;
            case Kind::And:
                self(self, g.left());
                self(self, g.right());
                code_.push_back({Op::And, 0});
                --depth;
                break;
            case Kind::Or:
                self(self, g.left());
                self(self, g.right());
                code_.push_back({Op::Or, 0});
                --depth;
                break;
            case Kind::Implies:
                self(self, g.left());
                code_.push_back({Op::Not, 0});
                self(self, g.right());
                code_.push_back({Op::Or, 0});
                --depth;
                break;
        }
    };
    emit(emit, f);
}

bool EvalProgram::run(std::uint32_t bits) const {
    std::array<std::uint8_t, 64> local{};
    std::vector<std::uint8_t> heap;
    std::uint8_t* stack = local.data();
    if (stack_need_ > local.size()) {
        heap.resize(stack_need_);
        stack = heap.data();
    }
    std::size_t top = 0;
    for (const Instr& instr : code_) {
        switch (instr.op) {
            case Op::Push:
                stack[top++] =
                    static_cast<std::uint8_t>((bits >> instr.slot) & 1u);
                break;
            case Op::Not:
                stack[top - 1] ^= 1u;
                break;
            case Op::And:
                --top;
                stack[top - 1] = stack[top - 1] & stack[top];
                break;
            case Op::Or:
                --top;
                stack[top - 1] = stack[top - 1] | stack[top];
                break;
        }
    }
    return stack[0] != 0;
}

TruthTable truth_table(const Formula& f) {
    EvalProgram program(f);
    const std::size_t n = program.variables().size();
    const std::size_t rows = std::size_t{1} << n;

    TruthTable table;
    table.variables = program.variables();
    table.outputs.resize(rows);

    const auto count = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (count >= 4096)
    for (std::int64_t k = 0; k < count; ++k) {
        const auto value = static_cast<std::uint32_t>(count - 1 - k);
        table.outputs[static_cast<std::size_t>(k)] = program.run(value) ? 1 : 0;
    }
    return table;
}

std::optional<Assignment> satisfying_assignment(const Formula& f) {
    EvalProgram program(f);
    const std::size_t n = program.variables().size();
    const std::size_t rows = std::size_t{1} << n;
    for (std::size_t k = 0; k < rows; ++k) {
        const auto value = static_cast<std::uint32_t>(rows - 1 - k);
        if (program.run(value)) {
            Assignment a;
            for (std::size_t i = 0; i < n; ++i) {
                a[program.variables()[i]] = ((value >> (n - 1 - i)) & 1u) != 0;
            }
            return a;
        }
    }
    return std::nullopt;
}

bool satisfiable(const Formula& f) {
    return satisfying_assignment(f).has_value();
}

Verdict compatible(const Formula& claim, const Formula& possibility) {
    if (possibility.kind() != Kind::Possibly) {
        throw std::invalid_argument(
            "possibility must be of the form <>(g), got: " +
            to_string(possibility));
    }
    const Formula body = possibility.child();
    return satisfiable(conj(claim, body)) ? Verdict::Compatible
                                          : Verdict::Incompatible;
}

}  // namespace logicnet
