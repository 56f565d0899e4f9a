#include <gtest/gtest.h>

#include <random>
#include <set>

#include "softtop/error.hpp"
#include "softtop/oracle.hpp"
#include "softtop/soft_set.hpp"
#include "support.hpp"

namespace softtop {
namespace {

SoftContext hctx() { return SoftContext({"h1", "h2", "h3"}, {"e1", "e2"}); }

Errc code_of(const auto& fn) {
  try {
    fn();
  } catch (const SoftError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no SoftError thrown";
  return Errc::kSyntaxError;
}

TEST(SoftContext, RejectsEmptyAndDuplicates) {
  EXPECT_EQ(code_of([] { SoftContext({}, {"e"}); }), Errc::kInvalidContext);
  EXPECT_EQ(code_of([] { SoftContext({"x"}, {}); }), Errc::kInvalidContext);
  EXPECT_EQ(code_of([] { SoftContext({"x", "x"}, {"e"}); }), Errc::kInvalidContext);
  EXPECT_EQ(code_of([] { SoftContext({"x"}, {"e", "e"}); }), Errc::kInvalidContext);
}

TEST(SoftContext, LookupAndCells) {
  const SoftContext c = hctx();
  EXPECT_EQ(c.cell_count(), 6U);
  EXPECT_EQ(c.cell(1, 2), 5U);
  EXPECT_EQ(c.element_index("h2"), 1U);
  EXPECT_EQ(c.parameter_index("e2"), 1U);
  EXPECT_FALSE(c.find_element("q"));
  EXPECT_EQ(code_of([&] { c.element_index("q"); }), Errc::kUnknownElement);
  EXPECT_EQ(code_of([&] { c.parameter_index("q"); }), Errc::kUnknownParameter);
  EXPECT_EQ(c, hctx());
  EXPECT_FALSE(c == SoftContext({"h1", "h2"}, {"e1", "e2"}));
  EXPECT_TRUE(c.same_parameters(SoftContext({"a"}, {"e1", "e2"})));
}

TEST(MakeSoftSet, BuildsExampleSet) {
  const SoftContext c = hctx();
  const SoftSet f1 = make_soft_set(c, {{"e1", {"h1", "h2"}}, {"e2", {"h3"}}});
  EXPECT_EQ(f1.at(0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(f1.at(1), (std::vector<std::size_t>{2}));
  EXPECT_EQ(to_string(f1), "{e1↦{h1,h2}, e2↦{h3}}");
}

TEST(MakeSoftSet, EmptyAssignmentIsNull) {
  const SoftContext c = hctx();
  EXPECT_TRUE(make_soft_set(c, {{"e1", {}}, {"e2", {}}}).is_null());
  EXPECT_EQ(to_string(SoftSet::null(c)), "{e1↦∅, e2↦∅}");
}

TEST(MakeSoftSet, Errors) {
  const SoftContext c = hctx();
  EXPECT_EQ(code_of([&] { make_soft_set(c, {{"e1", {"h1"}}}); }), Errc::kMissingParameter);
  EXPECT_EQ(code_of([&] { make_soft_set(c, {{"e1", {"h9"}}, {"e2", {}}}); }), Errc::kUnknownElement);
  EXPECT_EQ(code_of([&] { make_soft_set(c, {{"e1", {}}, {"e2", {}}, {"e3", {}}}); }), Errc::kUnknownParameter);
}

TEST(SoftOps, UnionAndIntersectionOfExampleSets) {
  const SoftContext c = hctx();
  const SoftSet f1 = make_soft_set(c, {{"e1", {"h2"}}, {"e2", {"h1"}}});
  const SoftSet f3 = make_soft_set(c, {{"e1", {"h3"}}, {"e2", {"h1", "h2"}}});
  EXPECT_EQ(soft_union(f1, f3), make_soft_set(c, {{"e1", {"h2", "h3"}}, {"e2", {"h1", "h2"}}}));
  EXPECT_EQ(soft_intersection(f1, f3), make_soft_set(c, {{"e1", {}}, {"e2", {"h1"}}}));
}

TEST(SoftOps, ComplementSubsetAndPoints) {
  const SoftContext c = hctx();
  const SoftSet f1 = make_soft_set(c, {{"e1", {"h1", "h2"}}, {"e2", {"h3"}}});
  const SoftSet f2 = make_soft_set(c, {{"e1", {"h1", "h2", "h3"}}, {"e2", {"h3"}}});
  const SoftSet f1c = soft_complement(f1);
  EXPECT_EQ(f1c, make_soft_set(c, {{"e1", {"h3"}}, {"e2", {"h1", "h2"}}}));
  EXPECT_EQ(soft_complement(SoftSet::null(c)), SoftSet::absolute(c));
  EXPECT_TRUE(soft_subset(f1, f2));
  EXPECT_FALSE(soft_subset(f1, f1c));
  EXPECT_TRUE(contains_point(f1c, parse_point(c, "h3@e1")));
  EXPECT_FALSE(contains_point(f1c, parse_point(c, "h3@e2")));
}

TEST(SoftOps, MixedContextsRejected) {
  const SoftContext c = hctx();
  const SoftContext d({"h1", "h2"}, {"e1", "e2"});
  EXPECT_EQ(code_of([&] { soft_union(SoftSet::null(c), SoftSet::null(d)); }), Errc::kContextMismatch);
  EXPECT_EQ(code_of([&] { soft_subset(SoftSet::null(c), SoftSet::null(d)); }), Errc::kContextMismatch);
}

TEST(SoftPoints, ParseAndCheck) {
  const SoftContext c = hctx();
  const SoftPoint p = parse_point(c, "h2@e2");
  EXPECT_EQ(p.element, 1U);
  EXPECT_EQ(p.parameter, 1U);
  EXPECT_EQ(to_string(c, p), "h2@e2");
  EXPECT_EQ(soft_point_set(c, p).cells().count(), 1U);
  EXPECT_EQ(code_of([&] { parse_point(c, "h2"); }), Errc::kSyntaxError);
  EXPECT_EQ(code_of([&] { parse_point(c, "h9@e1"); }), Errc::kUnknownElement);
  EXPECT_EQ(code_of([&] { check_point(c, SoftPoint{0, 5}); }), Errc::kUnknownParameter);
}

TEST(CellSet, OrderingIsNumeric) {
  EXPECT_LT(CellSet::from_word(6, 3), CellSet::from_word(6, 4));
  CellSet wide(130);
  wide.set(129);
  CellSet low(130);
  for (std::size_t i = 0; i < 64; ++i) low.set(i);
  EXPECT_LT(low, wide);
  EXPECT_TRUE(CellSet::full(130).all());
  EXPECT_EQ(CellSet::full(130).complement().count(), 0U);
  EXPECT_EQ(wide.cells(), (std::vector<std::size_t>{129}));
}

// Exhaustive over every context with |X|·|E| <= 4 and every pair of sets.
TEST(SoftCoreProperties, ExhaustiveLawsSmallContexts) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t e = 1; n * e <= 4; ++e) {
      const SoftContext c = synthetic_context('x', n, e);
      const auto all = enumerate_soft_sets(c);
      ASSERT_EQ(all.size(), std::size_t{1} << (n * e));
      for (const auto& a : all) {
        EXPECT_EQ(soft_complement(soft_complement(a)), a);
        EXPECT_EQ(soft_union(a, SoftSet::null(c)), a);
        EXPECT_EQ(soft_union(a, SoftSet::absolute(c)), SoftSet::absolute(c));
        EXPECT_EQ(soft_intersection(a, SoftSet::absolute(c)), a);
        EXPECT_TRUE(soft_intersection(a, SoftSet::null(c)).is_null());
        for (const auto& b : all) {
          EXPECT_EQ(soft_complement(soft_union(a, b)), soft_intersection(soft_complement(a), soft_complement(b)));
          EXPECT_EQ(soft_complement(soft_intersection(a, b)), soft_union(soft_complement(a), soft_complement(b)));
          EXPECT_EQ(soft_subset(a, b), soft_union(a, b) == b);
          EXPECT_EQ(soft_subset(a, b), soft_intersection(a, b) == a);
          EXPECT_EQ(soft_union(a, soft_intersection(a, b)), a);
        }
      }
    }
  }
}

TEST(SoftCoreProperties, RandomizedAgainstNaiveModel) {
  namespace nv = test::naive;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const SoftContext c = test::random_context(rng, 9, 9);
    const SoftSet a = test::random_soft_set(c, rng);
    const SoftSet b = test::random_soft_set(c, rng);
    const SoftSet d = test::random_soft_set(c, rng);
    const auto na = nv::from(a), nb = nv::from(b);
    ASSERT_EQ(nv::from(soft_union(a, b)), nv::unite(na, nb));
    ASSERT_EQ(nv::from(soft_intersection(a, b)), nv::intersect(na, nb));
    ASSERT_EQ(nv::from(soft_complement(a)), nv::complement(na, c.universe_size()));
    ASSERT_EQ(soft_subset(a, b), nv::subset(na, nb));
    ASSERT_EQ(soft_union(a, soft_union(b, d)), soft_union(soft_union(a, b), d));
    ASSERT_EQ(soft_intersection(a, soft_union(b, d)),
              soft_union(soft_intersection(a, b), soft_intersection(a, d)));
    const SoftPoint p{rng() % c.universe_size(), rng() % c.parameter_count()};
    ASSERT_EQ(contains_point(a, p), soft_subset(soft_point_set(c, p), a));
    ASSERT_EQ(contains_point(a, p), na.f[p.parameter].count(p.element) > 0);
  }
}

}  // namespace
}  // namespace softtop
