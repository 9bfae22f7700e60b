#include <stdexcept>

#include "doctest.h"
#include "qprop/ncset.hpp"

using namespace qprop;

TEST_CASE("NcMap construction validates the fiber partition") {
  CHECK_NOTHROW(NcMap(4, 3, {{3}, {}, {2, 4, 1}}));
  CHECK_THROWS_AS(NcMap(4, 3, {{3}, {}, {2, 4}}), std::invalid_argument);      // 1 uncovered
  CHECK_THROWS_AS(NcMap(4, 3, {{3}, {3}, {2, 4, 1}}), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(NcMap(4, 3, {{3}, {2, 4, 1}}), std::invalid_argument);       // missing fiber
  CHECK_THROWS_AS(NcMap(4, 3, {{5}, {}, {2, 4, 1}}), std::invalid_argument);   // out of range
}

TEST_CASE("underlying map is consistent with the fibers") {
  const NcMap f(4, 3, {{3}, {}, {2, 4, 1}});
  CHECK(f.apply(1) == 3);
  CHECK(f.apply(2) == 3);
  CHECK(f.apply(3) == 1);
  CHECK(f.apply(4) == 3);
  CHECK(f.underlying() == FinSetMap(4, 3, {3, 3, 1, 3}));
}

TEST_CASE("ordered-union composition") {
  const NcMap f(4, 3, {{3}, {}, {2, 4, 1}});
  const NcMap g(3, 1, {{3, 1, 2}});
  const NcMap gf = compose_nc(g, f);
  CHECK(gf == NcMap(4, 1, {{2, 4, 1, 3}}));

  CHECK(compose_nc(NcMap::identity(3), f) == f);
  CHECK(compose_nc(f, NcMap::identity(4)) == f);
  CHECK_THROWS_AS(compose_nc(f, g), std::invalid_argument);
}

TEST_CASE("composition is associative and functorial on underlying maps") {
  for (const auto& f : all_nc_maps(3, 2)) {
    for (const auto& g : all_nc_maps(2, 2)) {
      for (const auto& h : all_nc_maps(2, 3)) {
        const NcMap left = compose_nc(h, compose_nc(g, f));
        const NcMap right = compose_nc(compose_nc(h, g), f);
        CHECK(left == right);
        CHECK(left.underlying() ==
              compose_set(h.underlying(), compose_set(g.underlying(), f.underlying())));
      }
    }
  }
}

TEST_CASE("lift_set_map orders fibers increasingly") {
  CHECK(lift_set_map(FinSetMap::identity(3)) == NcMap::identity(3));
  CHECK(lift_set_map(FinSetMap(2, 3, {3, 1})) == NcMap(2, 3, {{2}, {}, {1}}));
  CHECK(lift_set_map(FinSetMap(3, 1, {1, 1, 1})) == NcMap(3, 1, {{1, 2, 3}}));
  // round trip through the underlying map
  for (const auto& f : all_set_maps(3, 3)) CHECK(lift_set_map(f).underlying() == f);
}

TEST_CASE("disjoint union is a block sum") {
  const NcMap f(2, 1, {{2, 1}});
  const NcMap g(1, 1, {{1}});
  CHECK(disjoint_union_nc(f, g) == NcMap(3, 2, {{2, 1}, {3}}));
  CHECK(disjoint_union_nc(NcMap::identity(1), NcMap::identity(1)) == NcMap::identity(2));

  const NcMap empty(0, 0, {});
  CHECK(disjoint_union_nc(f, empty) == f);
  CHECK(disjoint_union_nc(empty, f) == f);

  // strict associativity
  const NcMap h(3, 2, {{3, 1}, {2}});
  CHECK(disjoint_union_nc(disjoint_union_nc(f, g), h) ==
        disjoint_union_nc(f, disjoint_union_nc(g, h)));
}

TEST_CASE("disjoint union interchanges with composition") {
  for (const auto& f : all_nc_maps(2, 2)) {
    for (const auto& g : all_nc_maps(2, 1)) {
      for (const auto& p : all_nc_maps(1, 2)) {
        for (const auto& q : all_nc_maps(2, 2)) {
          CHECK(compose_nc(disjoint_union_nc(g, q), disjoint_union_nc(f, p)) ==
                disjoint_union_nc(compose_nc(g, f), compose_nc(q, p)));
        }
      }
    }
  }
}

TEST_CASE("perm_to_fold records one-line notation as a single fiber") {
  CHECK(perm_to_fold(Permutation::identity(3)) == NcMap(3, 1, {{1, 2, 3}}));
  CHECK(perm_to_fold(Permutation({2, 1})) == NcMap(2, 1, {{2, 1}}));
  CHECK(perm_to_fold(Permutation({3, 1, 2})) == NcMap(3, 1, {{3, 1, 2}}));
}

TEST_CASE("fold maps compose against block maps") {
  // with f: nm -> n given by consecutive blocks of size m, [id_n] o f = [id_nm]
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      std::vector<std::vector<int>> fibers(n);
      for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) fibers[j - 1].push_back((j - 1) * m + i);
      const NcMap f(n * m, n, std::move(fibers));
      CHECK(compose_nc(perm_to_fold(Permutation::identity(n)), f) ==
            perm_to_fold(Permutation::identity(n * m)));
    }
  }
}

TEST_CASE("surjection predicates") {
  CHECK(is_surjection(NcMap::identity(3)));
  CHECK(is_elementary_surjection(NcMap::identity(3)));
  CHECK_FALSE(is_surjection(NcMap(4, 3, {{3}, {}, {2, 4, 1}})));
  CHECK(is_surjection(NcMap(3, 2, {{1}, {3, 2}})));
  CHECK(is_elementary_surjection(NcMap(3, 2, {{1}, {3, 2}})));
  CHECK_FALSE(is_elementary_surjection(NcMap(3, 1, {{1, 2, 3}})));
  CHECK(is_injection(NcMap(2, 3, {{2}, {}, {1}})));
  CHECK_FALSE(is_injection(NcMap(3, 2, {{1}, {3, 2}})));
}

TEST_CASE("enumeration sizes") {
  CHECK(all_set_maps(3, 2).size() == 8);
  CHECK(all_set_maps(0, 2).size() == 1);
  CHECK(all_set_maps(2, 0).size() == 0);
  CHECK(all_set_maps(0, 0).size() == 1);
  // maps with ordered fibers are counted by rising factorials m(m+1)...(m+n-1)
  CHECK(all_nc_maps(4, 2).size() == 2 * 3 * 4 * 5);
  CHECK(all_nc_maps(3, 3).size() == 3 * 4 * 5);
  CHECK(all_nc_maps(0, 2).size() == 1);
  CHECK(all_nc_maps(2, 0).size() == 0);
}
