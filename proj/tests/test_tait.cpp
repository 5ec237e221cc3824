#include <doctest.h>

#include "wf/families.hpp"
#include "wf/tait.hpp"

using namespace wf;

TEST_CASE("exact colouring counts for the example webs") {
  CHECK(count_tait(make_theta()) == 6);
  CHECK(count_tait(make_tetrahedron()) == 6);
  CHECK(count_tait(make_prism(2)) == 12);
  CHECK(count_tait(make_prism(3)) == 6);
  CHECK(count_tait(make_petersen()) == 0);
  long long want = 1;
  for (int n = 1; n <= 6; ++n) {
    want *= 3;
    CHECK(count_tait(make_unlink(n)) == want);
  }
}

TEST_CASE("loops admit no colouring") {
  CHECK(count_tait(make_handcuff()) == 0);
  CHECK(count_tait_oracle(make_handcuff()) == 0);
}

TEST_CASE("backtracking count matches the exhaustive oracle") {
  for (const WebGraph& w : {make_theta(), make_tetrahedron(), make_prism(2),
                            make_prism(3), make_unlink(3), make_handcuff()})
    CHECK(count_tait(w) == count_tait_oracle(w));
}

TEST_CASE("oracle refuses webs too large to sweep") {
  CHECK_THROWS_AS(count_tait_oracle(make_prism(7)), std::invalid_argument);
}

TEST_CASE("counting identity on the example webs") {
  for (const WebGraph& w : {make_theta(), make_tetrahedron(), make_prism(2),
                            make_prism(3), make_petersen()}) {
    TaitReport rep = verify_identity(w);
    CHECK(rep.ok);
    CHECK(rep.tait_count == rep.identity_rhs);
  }
  CHECK(verify_identity(make_prism(2)).tait_count == 12);
  for (int n = 1; n <= 6; ++n) CHECK(verify_identity(make_unlink(n)).ok);
}

TEST_CASE("counting identity on seeded random cubic multigraphs") {
  auto webs = random_cubic_multigraphs(8, 0xC0FFEE, 40);
  CHECK(webs.size() == 40);
  for (const WebGraph& w : webs) {
    CHECK(w.validate().empty());
    TaitReport rep = verify_identity(w);
    CHECK(rep.ok);
    CHECK(rep.tait_count == count_tait_oracle(w));
  }
}

TEST_CASE("random generator is deterministic in the seed") {
  auto a = random_cubic_multigraphs(6, 42, 5);
  auto b = random_cubic_multigraphs(6, 42, 5);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(serialize_web(a[i]) == serialize_web(b[i]));
  auto c = random_cubic_multigraphs(6, 43, 5);
  bool any_diff = false;
  for (size_t i = 0; i < a.size(); ++i)
    any_diff = any_diff || serialize_web(a[i]) != serialize_web(c[i]);
  CHECK(any_diff);
}

TEST_CASE("random generator rejects bad parameters") {
  CHECK_THROWS_AS(random_cubic_multigraphs(7, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_cubic_multigraphs(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_cubic_multigraphs(14, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_cubic_multigraphs(8, 1, -1), std::invalid_argument);
}
