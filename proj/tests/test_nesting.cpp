#include "doctest.h"
#include "nesting.hpp"
#include "prep.hpp"
#include "test_util.hpp"

using namespace nsat;

TEST_CASE("is_nested finds the overlapping pair in the intro example") {
  ClauseDb db = test::intro_example();
  const auto w = is_nested(db);
  REQUIRE(w.has_value());
  CHECK(w->clause_i == 1);
  CHECK(w->clause_j == 3);
  CHECK(w->var_of_j_inside_i == 2);
  CHECK(w->var_of_i_inside_j == 2);
  CHECK_FALSE(db.nested_checked());
}

TEST_CASE("is_nested accepts nested sets and sets the flag") {
  ClauseDb db = test::make_db({{1, 3}, {2, 3}, {1, 2}}, 3);
  CHECK_FALSE(is_nested(db).has_value());
  CHECK(db.nested_checked());
  // nested but not in straddle-respecting order: {1,3} straddles {2,3}
  const auto v = verify_order(db);
  REQUIRE(v.has_value());
  CHECK(v->earlier == 1);
  CHECK(v->later == 2);

  ClauseDb empty = test::make_db({}, 0);
  CHECK_FALSE(is_nested(empty).has_value());
}

TEST_CASE("verify_order examples") {
  ClauseDb good = test::make_db({{2, 3}, {1, 3}}, 3);
  CHECK_FALSE(verify_order(good).has_value());
  CHECK(good.ordered_checked());

  ClauseDb bad = test::make_db({{1, 3}, {2, 3}}, 3);
  const auto v = verify_order(bad);
  REQUIRE(v.has_value());
  CHECK(v->earlier == 1);
  CHECK(v->later == 2);
  CHECK_FALSE(bad.ordered_checked());

  ClauseDb single = test::make_db({{1, 2}}, 2);
  CHECK_FALSE(verify_order(single).has_value());
}

TEST_CASE("sort_nested orders straddled clauses first") {
  const ClauseDb a = sort_nested(test::make_db({{1, 3}, {2, 3}}, 3));
  CHECK(a.extract_clauses() ==
        std::vector<Clause>{Clause::from_ints({2, 3}), Clause::from_ints({1, 3})});
  CHECK(a.ordered_checked());
  CHECK(a.nested_checked());

  // equal span width: the clause with interior literals precedes the
  // 2-literal clause that straddles it
  const ClauseDb b = sort_nested(test::make_db({{1, 5}, {1, 3, 5}}, 5));
  CHECK(b.extract_clauses() ==
        std::vector<Clause>{Clause::from_ints({1, 3, 5}), Clause::from_ints({1, 5})});

  // incomparable clauses keep their original order
  const ClauseDb c = sort_nested(test::make_db({{1, 2}, {3, 4}}, 4));
  CHECK(c.extract_clauses() ==
        std::vector<Clause>{Clause::from_ints({1, 2}), Clause::from_ints({3, 4})});
}

TEST_CASE("sort_nested rejects non-nested input with a witness") {
  try {
    sort_nested(test::intro_example());
    FAIL("expected NotNestedError");
  } catch (const NotNestedError& e) {
    CHECK(e.witness.clause_i == 1);
    CHECK(e.witness.clause_j == 3);
  }
}

TEST_CASE("literal_bound_check arithmetic") {
  CHECK(literal_bound_check(test::make_db({{1, 3}, {2, 3}}, 3)));  // 4 <= 7
  CHECK(literal_bound_check(test::make_db({}, 0)));                // 0 <= 0
}

TEST_CASE("build_forest produces the straddle hierarchy") {
  const ClauseDb db = test::make_db({{2, 3}, {1, 3, 5}, {1, 5}}, 5);
  const ClauseForest forest = build_forest(db);
  REQUIRE(forest.parent.size() == 3);
  CHECK(forest.parent[0] == 1);   // {1,3,5} is the minimal straddler of {2,3}
  CHECK(forest.parent[1] == 2);   // {1,5} straddles {1,3,5}
  CHECK(forest.parent[2] == -1);  // root
  CHECK(forest.roots == std::vector<int32_t>{2});
  CHECK(forest.is_ancestor(2, 0));
  CHECK(forest.is_ancestor(2, 1));
  CHECK_FALSE(forest.is_ancestor(0, 2));
}

TEST_CASE("build_forest groups equivalent 2-literal clauses") {
  const ClauseDb db = test::make_db({{1, 2}, {1, 2}}, 2);
  const ClauseForest forest = build_forest(db);
  CHECK(forest.roots == std::vector<int32_t>{0, 1});
  REQUIRE(forest.equivalence_groups.size() == 1);
  CHECK(forest.equivalence_groups[0] == std::vector<int32_t>{0, 1});

  const ClauseForest empty = build_forest(test::make_db({}, 0));
  CHECK(empty.roots.empty());
  CHECK(empty.parent.empty());
}

TEST_CASE("forest ancestor relation equals strict straddling on nested sets") {
  Rng rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    GeneratorConfig cfg;
    cfg.vars = 2 + static_cast<int32_t>(rng.below(11));
    cfg.clauses = static_cast<int32_t>(rng.below(12));
    cfg.max_width = 2 + static_cast<int32_t>(rng.below(4));
    cfg.seed = rng.next();
    const ClauseDb db = generate_nested(cfg);
    const ClauseForest forest = build_forest(db);
    for (int32_t i = 0; i < db.clause_count(); ++i) {
      for (int32_t j = 0; j < db.clause_count(); ++j) {
        if (i == j) continue;
        CHECK(forest.is_ancestor(i, j) ==
              strictly_straddles(db.clause(i), db.clause(j)));
      }
    }
  }
}

TEST_CASE("fast checks agree with the pairwise definition") {
  Rng rng(22);
  int nested_seen = 0;
  int overlap_seen = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const int32_t n = 4 + static_cast<int32_t>(rng.below(8));
    const int m = static_cast<int>(rng.below(7));
    std::vector<Clause> clauses;
    for (int i = 0; i < m; ++i) clauses.push_back(test::random_clause(rng, n, 4));
    ClauseDb db = build_db(clauses, n);
    ClauseDb db2 = db;

    const auto slow_nested = is_nested(db);
    const auto fast_nested = is_nested_fast(db2);
    CHECK(slow_nested.has_value() == fast_nested.has_value());
    if (fast_nested) {
      ++overlap_seen;
      // any reported witness must be a genuine mutual straddle
      const LitSpan a = db.clause(fast_nested->clause_i - 1);
      const LitSpan b = db.clause(fast_nested->clause_j - 1);
      CHECK(overlaps(a, b));
    } else {
      ++nested_seen;
    }

    const auto slow_order = verify_order(db);
    const auto fast_order = verify_order_fast(db2);
    CHECK(slow_order.has_value() == fast_order.has_value());
    if (fast_order) {
      CHECK(fast_order->earlier < fast_order->later);
      CHECK(straddles(db.clause(fast_order->earlier - 1),
                      db.clause(fast_order->later - 1)));
    }
  }
  CHECK(nested_seen > 20);
  CHECK(overlap_seen > 20);
}

TEST_CASE("hierarchy implication holds on generated nested sets") {
  Rng rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    GeneratorConfig cfg;
    cfg.vars = 2 + static_cast<int32_t>(rng.below(10));
    cfg.clauses = static_cast<int32_t>(rng.below(10));
    cfg.max_width = 2 + static_cast<int32_t>(rng.below(4));
    cfg.seed = rng.next();
    const ClauseDb db = generate_nested(cfg);
    const int32_t m = db.clause_count();
    for (int32_t a = 0; a < m; ++a) {
      for (int32_t b = 0; b < m; ++b) {
        if (b == a) continue;
        for (int32_t c = 0; c < m; ++c) {
          if (c == a || c == b) continue;
          if (!strictly_straddles(db.clause(a), db.clause(c)) ||
              !strictly_straddles(db.clause(b), db.clause(c))) {
            continue;
          }
          const bool ab = strictly_straddles(db.clause(a), db.clause(b));
          const bool ba = strictly_straddles(db.clause(b), db.clause(a));
          const bool equivalent_pair =
              db.clause(a).size() == 2 && db.clause(b).size() == 2 &&
              span_min_var(db.clause(a)) == span_min_var(db.clause(b)) &&
              span_max_var(db.clause(a)) == span_max_var(db.clause(b));
          CHECK((ab || ba || equivalent_pair));
        }
      }
    }
  }
}

TEST_CASE("sort_nested output always verifies") {
  Rng rng(24);
  for (int iter = 0; iter < 100; ++iter) {
    GeneratorConfig cfg;
    cfg.vars = 2 + static_cast<int32_t>(rng.below(14));
    cfg.clauses = static_cast<int32_t>(rng.below(16));
    cfg.max_width = 2 + static_cast<int32_t>(rng.below(5));
    cfg.seed = rng.next();
    const ClauseDb db = generate_nested(cfg);

    // shuffle the clauses, then demand a valid order back
    std::vector<Clause> clauses = db.extract_clauses();
    for (size_t i = clauses.size(); i > 1; --i) {
      std::swap(clauses[i - 1], clauses[rng.below(static_cast<uint32_t>(i))]);
    }
    ClauseDb shuffled = build_db(clauses, db.var_count());
    ClauseDb ordered = sort_nested(shuffled);
    CHECK_FALSE(verify_order(ordered).has_value());
    CHECK(ordered.clause_count() == db.clause_count());
  }
}
