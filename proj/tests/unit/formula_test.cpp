#include <gtest/gtest.h>

#include "resproof/formula.hpp"

using namespace resproof;

namespace {

Formula lit(int d) { return Formula::literal(Literal::from_dimacs(d)); }

}  // namespace

TEST(Formula, ConstantFolding) {
  EXPECT_TRUE(Formula::conj({}).is_true());
  EXPECT_TRUE(Formula::disj({}).is_false());
  EXPECT_TRUE(Formula::conj(lit(1), Formula::falsity()).is_false());
  EXPECT_TRUE(Formula::disj(lit(1), Formula::truth()).is_true());
  EXPECT_EQ(Formula::conj(lit(1), Formula::truth()).to_string(), "1");
  EXPECT_EQ(Formula::disj(Formula::falsity(), lit(2)).to_string(), "2");
}

TEST(Formula, Flattening) {
  auto f = Formula::conj(Formula::conj(lit(1), lit(2)), lit(3));
  EXPECT_EQ(f.to_string(), "and(1,2,3)");
  auto g = Formula::disj(lit(-1), Formula::disj(lit(2), lit(3)));
  EXPECT_EQ(g.to_string(), "or(-1,2,3)");
}

TEST(Formula, NegationPushesDown) {
  auto f = Formula::conj(Formula::disj(lit(1), lit(-2)), lit(3));
  EXPECT_EQ(Formula::negation(f).to_string(), "or(and(-1,2),-3)");
  EXPECT_TRUE(Formula::negation(Formula::truth()).is_false());
}

TEST(Formula, SharingCountsOnce) {
  auto shared = Formula::disj(lit(1), lit(2));
  auto f = Formula::conj(Formula::disj(shared, lit(3)), Formula::disj(shared, lit(4)));
  EXPECT_EQ(f.variables(), (std::vector<Var>{1, 2, 3, 4}));
  auto g = Formula::conj(shared, Formula::disj(lit(3), Formula::conj(shared, lit(4))));
  // g, shared, its two literals, or(3,..), 3, and(shared,4), 4
  EXPECT_EQ(g.dag_size(), 8u);
}

TEST(FormulaShape, Classes) {
  EXPECT_EQ(formula_shape(Formula::conj(Formula::disj(lit(1), lit(2)), lit(3))),
            FormulaShape::kCnf);
  EXPECT_EQ(formula_shape(Formula::disj(Formula::conj(lit(1), lit(2)), lit(3))),
            FormulaShape::kDnf);
  EXPECT_EQ(formula_shape(Formula::conj(Formula::disj(lit(1), Formula::conj(lit(2), lit(3))),
                                        lit(4))),
            FormulaShape::kOther);
  EXPECT_EQ(formula_shape(lit(5)), FormulaShape::kLiteral);
  EXPECT_EQ(formula_shape(Formula::truth()), FormulaShape::kConstant);
  EXPECT_EQ(formula_shape(Formula::disj(lit(1), lit(2))), FormulaShape::kClause);
  EXPECT_EQ(formula_shape(Formula::conj(lit(1), lit(2))), FormulaShape::kCube);
  for (auto s : {FormulaShape::kConstant, FormulaShape::kLiteral, FormulaShape::kClause,
                 FormulaShape::kCube}) {
    EXPECT_TRUE(is_cnf_shaped(s));
    EXPECT_TRUE(is_dnf_shaped(s));
  }
  EXPECT_FALSE(is_cnf_shaped(FormulaShape::kDnf));
  EXPECT_FALSE(is_dnf_shaped(FormulaShape::kCnf));
  EXPECT_STREQ(shape_name(FormulaShape::kCnf), "CNF");
}

TEST(FormulaShape, ToClauses) {
  auto cnf = Formula::conj(Formula::disj(lit(1), lit(-2)), lit(3));
  auto cl = formula_to_clauses(cnf);
  ASSERT_TRUE(cl);
  EXPECT_EQ(*cl, (std::vector<Clause>{Clause{1, -2}, Clause{3}}));
  EXPECT_FALSE(formula_to_clauses(Formula::disj(Formula::conj(lit(1), lit(2)), lit(3))));
  EXPECT_EQ(formula_to_clauses(Formula::falsity())->size(), 1u);
  EXPECT_TRUE(formula_to_clauses(Formula::truth())->empty());
  EXPECT_EQ(formula_to_clauses(Formula::conj(lit(1), lit(2)))->size(), 2u);
}

TEST(Formula, StructuralEquality) {
  EXPECT_TRUE(structurally_equal(Formula::disj(lit(1), lit(2)), Formula::disj(lit(1), lit(2))));
  EXPECT_FALSE(structurally_equal(Formula::disj(lit(1), lit(2)), Formula::conj(lit(1), lit(2))));
}
