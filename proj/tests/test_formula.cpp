#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "logicnet/formula.hpp"
#include "logicnet/rng.hpp"

using namespace logicnet;

TEST_CASE("factories and accessors") {
    const Formula f = implies(var("p"), var("q"));
    CHECK(f.kind() == Kind::Implies);
    CHECK(f.left().kind() == Kind::Var);
    CHECK(f.left().var_name() == "p");
    CHECK(f.right().var_name() == "q");

    const Formula g = possibly(neg(var("p")));
    CHECK(g.kind() == Kind::Possibly);
    CHECK(g.child().kind() == Kind::Not);
    CHECK(g.child().child().var_name() == "p");

    CHECK_THROWS_AS(f.var_name(), std::logic_error);
    CHECK_THROWS_AS(f.child(), std::logic_error);
    CHECK_THROWS_AS(g.left(), std::logic_error);
}

TEST_CASE("variable names are validated") {
    CHECK_NOTHROW(var("p"));
    CHECK_NOTHROW(var("_x9"));
    CHECK_NOTHROW(var("Name_1"));
    CHECK_THROWS_AS(var(""), std::invalid_argument);
    CHECK_THROWS_AS(var("1p"), std::invalid_argument);
    CHECK_THROWS_AS(var("p q"), std::invalid_argument);
    CHECK_THROWS_AS(var("p-q"), std::invalid_argument);
}

TEST_CASE("structural equality") {
    CHECK(implies(var("p"), var("q")) == implies(var("p"), var("q")));
    CHECK(implies(var("p"), var("q")) != implies(var("q"), var("p")));
    CHECK(conj(var("p"), var("q")) != disj(var("p"), var("q")));
    CHECK(neg(var("p")) != possibly(var("p")));
}

TEST_CASE("free variables in first-occurrence order") {
    const Formula f = implies(var("q"), conj(var("p"), var("q")));
    CHECK(free_variables(f) == std::vector<std::string>{"q", "p"});
    CHECK(free_variables(var("z")) == std::vector<std::string>{"z"});
}

TEST_CASE("node count and height") {
    CHECK(node_count(var("p")) == 1);
    CHECK(height(var("p")) == 0);
    const Formula f = implies(var("p"), conj(var("q"), neg(var("r"))));
    CHECK(node_count(f) == 6);
    CHECK(height(f) == 3);
}

TEST_CASE("printer uses minimal parentheses") {
    CHECK(to_string(implies(var("p"), var("q"))) == "p -> q");
    CHECK(to_string(disj(neg(var("p")), possibly(conj(var("q"), var("r"))))) ==
          "!p | <>(q & r)");
    CHECK(to_string(implies(var("p"), implies(var("q"), var("r")))) ==
          "p -> q -> r");
    CHECK(to_string(implies(implies(var("p"), var("q")), var("r"))) ==
          "(p -> q) -> r");
    CHECK(to_string(disj(conj(var("p"), var("q")), var("r"))) == "p & q | r");
    CHECK(to_string(conj(var("p"), disj(var("q"), var("r")))) == "p & (q | r)");
    CHECK(to_string(neg(conj(var("p"), var("q")))) == "!(p & q)");
    CHECK(to_string(neg(neg(var("p")))) == "!!p");
    // left-associative chains print bare, right-nested ones keep parens
    CHECK(to_string(conj(conj(var("p"), var("q")), var("r"))) == "p & q & r");
    CHECK(to_string(conj(var("p"), conj(var("q"), var("r")))) == "p & (q & r)");
}

TEST_CASE("strip_possibly and rewrite_implications") {
    const Formula f = implies(var("p"), possibly(conj(var("q"), neg(var("r")))));
    const Formula stripped = strip_possibly(f);
    CHECK(stripped == implies(var("p"), conj(var("q"), neg(var("r")))));
    const Formula rewritten = rewrite_implications(stripped);
    CHECK(rewritten == disj(neg(var("p")), conj(var("q"), neg(var("r")))));
    // untouched trees come back identical
    CHECK(strip_possibly(rewritten) == rewritten);
    CHECK(rewrite_implications(rewritten) == rewritten);
}

TEST_CASE("eval matches classical semantics") {
    const Formula f = implies(var("p"), var("q"));
    CHECK(eval(f, {{"p", true}, {"q", false}}) == false);
    CHECK(eval(f, {{"p", false}, {"q", false}}) == true);
    CHECK(eval(var("p"), {{"p", true}}) == true);
    // possibly is transparent per assignment
    CHECK(eval(possibly(var("p")), {{"p", false}}) == false);
    // extra entries are ignored, missing ones throw
    CHECK(eval(var("p"), {{"p", true}, {"q", false}}) == true);
    CHECK_THROWS_AS(eval(f, {{"p", true}}), std::invalid_argument);
}

TEST_CASE("truth table layout") {
    const TruthTable table = truth_table(implies(var("p"), var("q")));
    CHECK(table.variables == std::vector<std::string>{"p", "q"});
    REQUIRE(table.rows() == 4);
    CHECK(table.outputs == std::vector<std::uint8_t>{1, 0, 1, 1});
    // rows count down: (1,1), (1,0), (0,1), (0,0)
    CHECK(table.row_bits(0) == std::vector<std::uint8_t>{1, 1});
    CHECK(table.row_bits(1) == std::vector<std::uint8_t>{1, 0});
    CHECK(table.row_bits(2) == std::vector<std::uint8_t>{0, 1});
    CHECK(table.row_bits(3) == std::vector<std::uint8_t>{0, 0});
    CHECK(table.input_bit(1, 0) == 1);
    CHECK(table.input_bit(1, 1) == 0);
    const Assignment a = table.row_assignment(1);
    CHECK(a.at("p") == true);
    CHECK(a.at("q") == false);
}

TEST_CASE("implication table equals its or-not form") {
    CHECK(truth_table(implies(var("p"), var("q"))) ==
          truth_table(disj(neg(var("p")), var("q"))));
}

TEST_CASE("single variable table") {
    const TruthTable table = truth_table(var("p"));
    CHECK(table.outputs == std::vector<std::uint8_t>{1, 0});
}

TEST_CASE("contradiction gives an all-zero column") {
    const TruthTable table = truth_table(conj(var("p"), neg(var("p"))));
    CHECK(table.outputs == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("variable cap on enumeration") {
    Formula f = var("v0");
    for (int i = 1; i <= 20; ++i) f = disj(f, var("v" + std::to_string(i)));
    CHECK(free_variables(f).size() == 21);
    CHECK_THROWS_AS(truth_table(f), std::invalid_argument);
    CHECK_THROWS_AS(satisfiable(f), std::invalid_argument);
}

TEST_CASE("satisfiability and witnesses") {
    CHECK_FALSE(satisfiable(conj(var("p"), neg(var("p")))));
    CHECK_FALSE(satisfiable(conj(implies(var("p"), var("q")),
                                 conj(var("p"), neg(var("q"))))));

    const auto witness = satisfying_assignment(conj(var("p"), neg(var("q"))));
    REQUIRE(witness.has_value());
    CHECK(witness->at("p") == true);
    CHECK(witness->at("q") == false);

    // first satisfying row in table order wins
    const auto first = satisfying_assignment(disj(var("p"), var("q")));
    REQUIRE(first.has_value());
    CHECK(first->at("p") == true);
    CHECK(first->at("q") == true);

    CHECK_FALSE(satisfying_assignment(conj(var("p"), neg(var("p")))).has_value());
}

TEST_CASE("compatibility verdicts") {
    const Formula claim = implies(var("p"), var("q"));
    CHECK(compatible(claim, possibly(conj(var("p"), neg(var("q"))))) ==
          Verdict::Incompatible);
    CHECK(compatible(claim, possibly(disj(neg(var("p")), var("q")))) ==
          Verdict::Compatible);
    CHECK(compatible(var("p"), possibly(var("p"))) == Verdict::Compatible);
    CHECK_THROWS_AS(compatible(claim, conj(var("p"), var("q"))),
                    std::invalid_argument);
}

TEST_CASE("compatible mirrors satisfiability of the conjunction") {
    DetRng rng(41);
    const std::vector<std::string> names{"p", "q", "r"};
    for (int i = 0; i < 200; ++i) {
        const Formula claim = testgen::random_formula(rng, 4, names, false);
        const Formula inner = testgen::random_formula(rng, 4, names, false);
        const Verdict v = compatible(claim, possibly(inner));
        CHECK((v == Verdict::Incompatible) == !satisfiable(conj(claim, inner)));
    }
}

TEST_CASE("implication always evaluates like not-or") {
    DetRng rng(7);
    const std::vector<std::string> names{"p", "q", "r"};
    for (int i = 0; i < 300; ++i) {
        const Formula a = testgen::random_formula(rng, 4, names);
        const Formula b = testgen::random_formula(rng, 4, names);
        const Formula lhs = implies(a, b);
        const Formula rhs = disj(neg(a), b);
        const TruthTable t = truth_table(lhs);
        for (std::size_t row = 0; row < t.rows(); ++row) {
            const Assignment assignment = t.row_assignment(row);
            CHECK(eval(lhs, assignment) == eval(rhs, assignment));
        }
    }
}

TEST_CASE("compiled row programs agree with eval") {
    DetRng rng(13);
    const std::vector<std::string> names{"p", "q", "r"};
    for (int i = 0; i < 300; ++i) {
        const Formula f = testgen::random_formula(rng, 5, names);
        const std::vector<std::string> vars = free_variables(f);
        const EvalProgram program(f, vars);
        const std::size_t n = vars.size();
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            Assignment a;
            for (std::size_t v = 0; v < n; ++v) {
                a[vars[v]] = (bits >> (n - 1 - v)) & 1u;
            }
            CHECK(program.run(bits) == eval(f, a));
        }
    }
}
