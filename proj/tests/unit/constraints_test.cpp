#include <pbundle/constraints.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/registry.hpp>

#include <gtest/gtest.h>

#include <algorithm>

namespace pbundle {
namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// Three copies of T(-1) on P^3 modulo six trivial summands.
SetupParams bordiga() {
  SetupParams p;
  p.n = 3;
  p.r = 2;
  p.m = 3;
  p.d = 3;
  p.tau = 6;
  p.alpha = 1;
  p.deg_w = 6;
  p.chern = ChernData(3, 3, ints({1, 3, 6, 10}));
  p.flags = SetupFlags{true, true, true};
  return p;
}

TEST(SetupParamsTest, ValidateRejectsBrokenInvariants) {
  EXPECT_NO_THROW(bordiga().validate());
  auto p = bordiga();
  p.m = 4;
  EXPECT_THROW(p.validate(), InvalidInput);
  p = bordiga();
  p.alpha = 0;
  EXPECT_THROW(p.validate(), InvalidInput);
  p = bordiga();
  p.r = 3;
  EXPECT_THROW(p.validate(), InvalidInput);
  p = bordiga();
  p.flags.e_nonample = false;
  EXPECT_THROW(p.validate(), InvalidInput);
  p = bordiga();
  p.deg_w = 0;
  EXPECT_THROW(p.validate(), InvalidInput);
}

TEST(ConstraintsTest, ConsistentSignaturePassesEverything) {
  const ConstraintReport rep = run_all(bordiga());
  EXPECT_TRUE(rep.all_pass()) << ::testing::PrintToString(rep.failures());
  EXPECT_EQ(rep.entries().size(), constraint_ids().size());
  for (std::size_t i = 0; i < rep.entries().size(); ++i) EXPECT_EQ(rep.entries()[i].id, constraint_ids()[i]);
}

TEST(ConstraintsTest, IdsAreSortedAndUnique) {
  const auto ids = constraint_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
}

TEST(ConstraintsTest, WrongAlphaBreaksSegreFormulas) {
  auto p = bordiga();
  p.alpha = 2;
  const ConstraintReport rep = run_all(p);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.find(kSegreFormulas)->status, Status::fail);
  EXPECT_EQ(rep.find(kIndexEquation)->status, Status::pass);
}

TEST(ConstraintsTest, WrongTauBreaksIndexEquation) {
  auto p = bordiga();
  p.tau = 5;
  EXPECT_EQ(check_index_equation(p).status, Status::fail);
  EXPECT_FALSE(check_index_equation(p).witness.empty());
}

TEST(ConstraintsTest, WrongCodimensionBreaksCodimEquation) {
  auto p = bordiga();
  p.m = 2;
  EXPECT_EQ(check_codim_equation(p).status, Status::fail);
}

TEST(ConstraintsTest, NotApplicableOutsideRegime) {
  auto p = bordiga();
  p.flags.y_is_projective_space = false;
  EXPECT_EQ(check_pn_target(p).status, Status::not_applicable);
  for (const auto& e : check_betti(p)) EXPECT_EQ(e.status, Status::not_applicable) << e.id;
}

TEST(ConstraintsTest, RunSelectedKeepsOnlyRequestedIds) {
  const std::vector<std::string> ids{std::string(kIndexEquation), std::string(kCodimEquation)};
  const ConstraintReport rep = run_selected(bordiga(), ids);
  ASSERT_EQ(rep.entries().size(), 2u);
  EXPECT_EQ(rep.entries()[0].id, kCodimEquation);
  EXPECT_EQ(rep.entries()[1].id, kIndexEquation);
  const std::vector<std::string> bogus{"no_such_check"};
  EXPECT_THROW(run_selected(bordiga(), bogus), InvalidInput);
}

TEST(ConstraintsTest, NonampleDerivation) {
  const auto dc = derive_nonample_d_c1(3, 2, 3, 6);
  ASSERT_TRUE(dc.has_value());
  EXPECT_EQ(dc->first, 3);
  EXPECT_EQ(dc->second, 3);
  const auto ex1 = derive_nonample_d_c1(2, 3, 3, 6);
  ASSERT_TRUE(ex1.has_value());
  EXPECT_EQ(ex1->first, 2);
  EXPECT_EQ(ex1->second, 2);
}

TEST(ConstraintsTest, DegreeOfCenter) {
  EXPECT_EQ(degree_from_exceptional(bordiga()), 6);
  const auto back = segre_back_solved_degree(bordiga());
  if (back) EXPECT_EQ(*back, 6);
}

TEST(ConstraintsTest, CatalogRecordsAreConsistent) {
  for (const auto& rec : catalog(8)) {
    const ConstraintReport rep = run_all(rec.params);
    EXPECT_TRUE(rep.all_pass()) << rec.key << ": " << ::testing::PrintToString(rep.failures());
  }
}

TEST(ConstraintsTest, ReportSortsEntries) {
  const ConstraintReport rep({{"z", Status::pass, ""}, {"a", Status::fail, "x"}});
  EXPECT_EQ(rep.entries()[0].id, "a");
  EXPECT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.failures(), std::vector<std::string>{"a"});
  EXPECT_EQ(rep.find("missing"), nullptr);
}

}  // namespace
}  // namespace pbundle
