#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace logicnet {

// Connective kinds of the propositional AST. Possibly is the diamond
// operator: transparent in per-assignment evaluation, with modal force
// only through compatible().
enum class Kind { Var, Not, And, Or, Implies, Possibly };

// Immutable formula tree. Copies share structure and are cheap; all
// operations on formulas are pure, so values can be used from any thread.
class Formula {
public:
    Kind kind() const { return node_->kind; }

    const std::string& var_name() const;  // Var nodes only
    Formula child() const;                // Not and Possibly nodes
    Formula left() const;                 // binary nodes
    Formula right() const;

    // Structural equality.
    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    friend Formula var(std::string name);
    friend Formula neg(Formula f);
    friend Formula conj(Formula a, Formula b);
    friend Formula disj(Formula a, Formula b);
    friend Formula implies(Formula a, Formula b);
    friend Formula possibly(Formula f);

private:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        Kind kind;
        std::string name;  // Var only
        NodePtr a, b;      // unary nodes use a
    };
    explicit Formula(NodePtr n) : node_(std::move(n)) {}
    NodePtr node_;
};

// Node factories. var() requires a nonempty identifier
// ([A-Za-z_][A-Za-z0-9_]*) and throws std::invalid_argument otherwise.
Formula var(std::string name);
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula possibly(Formula f);

// Variable name -> truth value for one row.
using Assignment = std::map<std::string, bool>;

// Free variables in first-occurrence (depth-first, left to right) order.
// This is the column order of truth tables and the input order of
// compiled networks.
std::vector<std::string> free_variables(const Formula& f);

std::size_t node_count(const Formula& f);  // total nodes, leaves included
int height(const Formula& f);              // Var leaves have height 0

// Canonical concrete syntax with minimal parentheses; parse(to_string(f))
// reconstructs f exactly.
std::string to_string(const Formula& f);

// Possibly nodes removed (identity rewrite).
Formula strip_possibly(const Formula& f);
// Every Implies(a, b) rewritten to Or(Not(a), b).
Formula rewrite_implications(const Formula& f);

// Classical semantics; Implies(a,b) holds unless a holds and b fails,
// Possibly is the identity. The assignment must cover every free variable
// (extra entries are ignored); a missing variable throws
// std::invalid_argument.
bool eval(const Formula& f, const Assignment& a);

// Exhaustive enumeration guard for truth_table / satisfiable.
inline constexpr std::size_t kMaxTableVariables = 20;

// Exhaustive assignment -> value map. Row k assigns the bits of
// (2^n - 1 - k) to the variables, first variable at the most significant
// bit, so rows run (1,..,1), (1,..,0), ..., (0,..,0) like a conventional
// t-first truth table.
struct TruthTable {
    std::vector<std::string> variables;
    std::vector<std::uint8_t> outputs;  // outputs[k] is row k's value

    std::size_t rows() const { return outputs.size(); }
    std::uint8_t input_bit(std::size_t row, std::size_t variable) const;
    std::vector<std::uint8_t> row_bits(std::size_t row) const;
    Assignment row_assignment(std::size_t row) const;

    bool operator==(const TruthTable&) const = default;
};

// Brute-force enumeration of all 2^n assignments. Throws
// std::invalid_argument beyond kMaxTableVariables.
TruthTable truth_table(const Formula& f);

// First satisfying assignment in truth-table row order, or nullopt.
std::optional<Assignment> satisfying_assignment(const Formula& f);
bool satisfiable(const Formula& f);

enum class Verdict { Compatible, Incompatible };

// Whether `claim` can hold together with the content of `possibility`.
// `possibility` must be a Possibly-rooted formula <>(g); the verdict is
// Incompatible exactly when claim AND g has no satisfying assignment.
Verdict compatible(const Formula& claim, const Formula& possibility);

// Postfix form of a formula evaluated against packed assignment bits.
// Built once and reused across rows by the enumeration sweeps; eval()
// stays the plain per-assignment reference.
class EvalProgram {
public:
    explicit EvalProgram(const Formula& f);
    EvalProgram(const Formula& f, std::vector<std::string> variables);

    const std::vector<std::string>& variables() const { return variables_; }

    // Variable i (in variables() order) is bit (n-1-i) of `bits`: the
    // first variable is the most significant bit, matching TruthTable.
    bool run(std::uint32_t bits) const;

private:
    enum class Op : std::uint8_t { Push, Not, And, Or };
    struct Instr {
        Op op;
        std::uint8_t slot;  // Push only: bit position
    };
    std::vector<Instr> code_;
    std::vector<std::string> variables_;
    std::size_t stack_need_ = 0;
};

}  // namespace logicnet
