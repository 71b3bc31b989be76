#include "doctest.h"

#include "zdposet/generators.hpp"
#include "zdposet/poset_text.hpp"
#include "zdposet/theorems.hpp"

using namespace zdp;

TEST_CASE("named examples pass every applicable check") {
  for (const auto &name : example_names()) {
    for (std::size_t param : {2, 3, 4}) {
      const Poset p = named_example(name, example_takes_param(name) ? param : 0);
      const TheoremReport r = check_poset(p);
      CHECK(r.poset_id == encode_poset(p));
      REQUIRE(r.verdicts.size() == check_names().size());
      for (const auto &[check, v] : r.verdicts) {
        INFO(name << " " << param << " " << check);
        CHECK(v.status != Status::fail);
        if (v.status == Status::not_applicable)
          CHECK_FALSE(v.reason.empty());
      }
    }
  }
}

TEST_CASE("counterexample poset") {
  const TheoremReport r = check_poset(named_example("deg_counterexample"));
  for (const char *c : {"prop_3_5", "prop_4_4_a", "prop_4_5", "prop_4_11", "sanity_diam_le_3"})
    CHECK(r.verdicts.at(c).status == Status::pass);
}

TEST_CASE("posets without zero-divisors are not applicable everywhere") {
  const TheoremReport r = check_poset(build_poset({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}}));
  for (const auto &[check, v] : r.verdicts) {
    CHECK(v.status == Status::not_applicable);
    CHECK(v.reason == "no zero-divisors");
  }
}

TEST_CASE("infinite-only checks are never evaluated") {
  for (const auto &p : {named_example("powerset", 3), named_example("antichain", 3)}) {
    const TheoremReport r = check_poset(p);
    CHECK(r.verdicts.at("prop_4_7").status == Status::not_applicable);
    CHECK(r.verdicts.at("cor_4_12").status == Status::not_applicable);
  }
}

TEST_CASE("bound check on the power set") {
  CHECK(check_poset(named_example("powerset", 3)).verdicts.at("prop_4_11").status == Status::pass);
}

TEST_CASE("sweep") {
  const SweepSummary s = sweep(3, 1);
  CHECK(s.max_n == 3);
  CHECK(s.instances_checked == 1 + 2 + 9);
  CHECK(s.failures.empty());
  REQUIRE(s.counts.size() == check_names().size());
  for (const auto &[check, c] : s.counts)
    CHECK(c.pass + c.fail + c.not_applicable == s.instances_checked);
  // Only 0 < a, 0 < b (three labellings) has zero-divisors at n = 3.
  CHECK(s.counts.at("sanity_connectivity").pass == 3);

  CHECK_THROWS_AS(sweep(0, 1), CapExceeded);
  CHECK_THROWS_AS(sweep(8, 1), CapExceeded);
}

TEST_CASE("sweep does not depend on the worker count") {
  const SweepSummary one = sweep(5, 1);
  CHECK(one.instances_checked == 1 + 2 + 9 + 76 + 1095);
  CHECK(one.failures.empty());
  for (std::size_t w : {2, 3, 8})
    CHECK(sweep(5, w) == one);
}
