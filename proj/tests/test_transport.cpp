#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gkm/transport.hpp"

#include "support/testsupport.hpp"

#include <algorithm>

using namespace gkm;
using gkmtest::load_fixture;

TEST_CASE("compatibility coefficients") {
  GkmGraph cp2 = load_fixture("cp2");
  // Along 1->2 (dart 0): alpha(2->3) - alpha(1->3) = (x2-x1) - x2 = -x1.
  auto d = compat_coefficient(cp2, 0, 2, 4);
  REQUIRE(d.has_value());
  CHECK(*d == -1);

  // e' = e, e'' = reverse(e) with alpha(rev) = -alpha: d = -2.
  auto self = compat_coefficient(cp2, 0, 0, 1);
  REQUIRE(self.has_value());
  CHECK(*self == -2);

  // Mixed signs: -2*x2 is not a multiple of x1.
  GkmGraph mixed = load_fixture("doubled-mixed-signs");
  CHECK_FALSE(compat_coefficient(mixed, 0, 2, 3).has_value());

  CHECK_THROWS_AS(compat_coefficient(cp2, 0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(compat_coefficient(cp2, 0, 0, 5), std::invalid_argument);
}

TEST_CASE("transport search on the worked fixtures") {
  auto t = find_transport(load_fixture("cp2"));
  REQUIRE(t.has_value());
  // Forced map along 1->2: the x2 dart at vertex 1 goes to the x2-x1 dart.
  const auto& m = t->maps[0];
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::pair<int, int>{0, 1});
  CHECK(m[1] == std::pair<int, int>{2, 4});

  CHECK(find_transport(load_fixture("doubled")).has_value());
  CHECK_FALSE(find_transport(load_fixture("doubled-mixed-signs")).has_value());
  CHECK_THROWS_AS(find_transport(load_fixture("corrupted")), std::invalid_argument);
}

TEST_CASE("found transports pass the checker") {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    CAPTURE(name);
    GkmGraph g = load_fixture(name);
    auto t = find_transport(g);
    REQUIRE(t.has_value());
    CHECK(check_transport(g, *t));
  }
}

TEST_CASE("checker rejects corrupted transports") {
  GkmGraph seg = load_fixture("segment");
  auto t = find_transport(seg);
  REQUIRE(t.has_value());
  CHECK(check_transport(seg, *t));

  GkmGraph cp2 = load_fixture("cp2");
  auto tc = find_transport(cp2);
  REQUIRE(tc.has_value());
  // Swap one image pair without fixing the inverse: breaks condition (i).
  Transport broken = *tc;
  std::swap(broken.maps[0][0].second, broken.maps[0][1].second);
  CHECK_FALSE(check_transport(cp2, broken));
}

TEST_CASE("transport coefficients") {
  GkmGraph cp2 = load_fixture("cp2");
  auto t = find_transport(cp2);
  REQUIRE(t.has_value());
  auto coeffs = transport_coefficients(cp2, *t, 0);
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs.at(0) == -2);
  CHECK(coeffs.at(2) == -1);

  GkmGraph seg = load_fixture("segment");
  auto ts = find_transport(seg);
  auto cs = transport_coefficients(seg, *ts, 0);
  REQUIRE(cs.size() == 1);
  CHECK(cs.at(0) == 0);  // alpha(rev) = +x1, so the difference vanishes

  GkmGraph doubled = load_fixture("doubled");
  auto td = find_transport(doubled);
  auto cd = transport_coefficients(doubled, *td, 0);
  CHECK(cd.at(0) == 0);
  CHECK(cd.at(2) == 0);
}

TEST_CASE("is_gkm") {
  CHECK(is_gkm(load_fixture("cp2")));
  CHECK_FALSE(is_gkm(load_fixture("doubled-mixed-signs")));
  CHECK_FALSE(is_gkm(load_fixture("corrupted")));
}

TEST_CASE("exhaustive enumeration agrees with the matching search") {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    CAPTURE(name);
    GkmGraph g = load_fixture(name);
    REQUIRE(g.valence() <= 3);
    std::vector<Transport> all = gkmtest::all_transports_bruteforce(g);
    auto found = find_transport(g);
    CHECK(all.empty() == !found.has_value());
    if (found.has_value()) {
      // Every enumerated family satisfies the checker, and the search
      // returns the lexicographically least of them.
      for (const Transport& t : all) CHECK(check_transport(g, t));
      auto least = std::min_element(all.begin(), all.end(),
                                    gkmtest::transport_less);
      CHECK(found->maps == least->maps);
    }
  }
  CHECK(gkmtest::all_transports_bruteforce(load_fixture("doubled-mixed-signs")).empty());
}

TEST_CASE("stored reverse maps are inverses") {
  for (const std::string& name : gkmtest::gkm_fixture_names()) {
    GkmGraph g = load_fixture(name);
    auto t = find_transport(g);
    REQUIRE(t.has_value());
    for (int e = 0; e < g.num_darts(); ++e) {
      int rev = g.dart(e).reverse;
      for (const auto& [src, img] : t->maps[static_cast<size_t>(e)]) {
        const auto& back = t->maps[static_cast<size_t>(rev)];
        auto it = std::find(back.begin(), back.end(), std::pair<int, int>{img, src});
        CHECK(it != back.end());
      }
    }
  }
}

TEST_CASE("search is deterministic") {
  GkmGraph g = load_fixture("cp3");
  auto a = find_transport(g);
  auto b = find_transport(g);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->maps == b->maps);
  CHECK(transport_to_json(*a) == transport_to_json(*b));
}
