#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "qprop/operad.hpp"
#include "qprop/span.hpp"

using namespace qprop;

namespace {

long long rank_of(const std::vector<int>& images) { return perm_rank(Permutation(images)); }

// the ordered-fiber map described by a twisted map over the orderings operad
Span span_of(const SetOperad& P, const FpSpan& s) {
  return make_span(DoubleKind::Fas2, fp_to_nc(P, s.phi), lift_set_map(s.f));
}

FpSpan fp_of(const SetOperad& P, const Span& s) {
  return make_fp_span(P, s.src, s.dst, nc_to_fp(P, s.phi), s.f.underlying());
}

std::tuple<int, std::vector<int>, std::vector<long long>, std::vector<int>> key_of(
    const FpSpan& s) {
  return {s.mid, s.phi.f.values, s.phi.omega, s.f.values};
}

}  // namespace

TEST_CASE("the operad of orderings and the terminal operad") {
  const SetOperad as = as_operad(5);
  const SetOperad com = com_operad(5);

  CHECK(as.size(0) == 1);
  CHECK(as.size(1) == 1);
  CHECK(as.size(3) == 6);
  CHECK(as.size(5) == 120);
  for (int n = 0; n <= 5; ++n) CHECK(com.size(n) == 1);

  // substituting identities around the unit
  CHECK(as.gamma(as.unit(), {{2, 1}}) == 1);
  CHECK(as.gamma(0, {{1, 0}, {1, 0}}) == 0);

  // the swap of two blocks of widths (2, 1) moves the single element first
  CHECK(as.gamma(rank_of({2, 1}), {{2, 0}, {1, 0}}) == rank_of({2, 3, 1}));
  // substituting a swap into an input slot swaps inside the block
  CHECK(as.gamma(0, {{2, rank_of({2, 1})}, {1, 0}}) == rank_of({2, 1, 3}));

  // the action composes one-line forms
  CHECK(as.act(2, rank_of({2, 1}), Permutation({2, 1})) == 0);
  CHECK(as.act(3, rank_of({2, 3, 1}), Permutation({3, 1, 2})) == rank_of({1, 2, 3}));
  CHECK(com.act(3, 0, Permutation({3, 1, 2})) == 0);
}

TEST_CASE("the operad laws hold up to total arity four") {
  CHECK(validate_operad_laws(as_operad(6), 4));
  CHECK(validate_operad_laws(com_operad(6), 4));
}

TEST_CASE("queries beyond the truncation arity are rejected") {
  const SetOperad as = as_operad(3);
  CHECK_THROWS_AS(as.size(4), std::invalid_argument);
  CHECK_THROWS_AS(as.size(-1), std::invalid_argument);
  CHECK_THROWS_AS(as_operad(21), std::invalid_argument);
  CHECK_THROWS_AS(as.gamma(0, {{2, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(as.act(4, 0, Permutation::identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(as.gamma(6, {{1, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(nc_to_fp(as, NcMap(4, 1, {{2, 4, 1, 3}})), std::invalid_argument);
  CHECK_THROWS_AS(nc_to_fp(com_operad(5), NcMap::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_fp(as, FinSetMap(2, 1, {1, 1}), {2}), std::invalid_argument);
  CHECK_THROWS_AS(make_fp(as, FinSetMap(2, 1, {1, 1}), {0, 0}), std::invalid_argument);
}

TEST_CASE("twisted maps over the orderings operad mirror maps with ordered fibers") {
  const SetOperad P = as_operad(6);

  SUBCASE("the fiber orderings become position twists") {
    const NcMap f(4, 3, {{3}, {}, {2, 4, 1}});
    const FPMorphism m = nc_to_fp(P, f);
    CHECK(m.f == f.underlying());
    CHECK(m.omega == std::vector<long long>{0, 0, rank_of({3, 1, 2})});
    CHECK(fp_to_nc(P, m) == f);
  }

  SUBCASE("the translation is a bijection") {
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        const auto ordered = all_nc_maps(n, m);
        const auto twisted = all_fp_morphisms(P, n, m);
        CHECK(ordered.size() == twisted.size());
        std::set<std::pair<std::vector<int>, std::vector<long long>>> seen;
        for (const auto& f : ordered) {
          const FPMorphism t = nc_to_fp(P, f);
          CHECK(fp_to_nc(P, t) == f);
          CHECK(seen.insert({t.f.values, t.omega}).second);
        }
        for (const auto& t : twisted) CHECK(nc_to_fp(P, fp_to_nc(P, t)) == t);
      }
  }

  SUBCASE("composition corresponds") {
    const NcMap f(4, 3, {{3}, {}, {2, 4, 1}});
    const NcMap g(3, 1, {{3, 1, 2}});
    const FPMorphism composite = compose_fp(P, nc_to_fp(P, g), nc_to_fp(P, f));
    CHECK(composite.omega == std::vector<long long>{rank_of({3, 1, 4, 2})});
    CHECK(fp_to_nc(P, composite) == compose_nc(g, f));

    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (int k = 0; k <= 2; ++k)
          for (const auto& a : all_nc_maps(n, m))
            for (const auto& b : all_nc_maps(m, k))
              CHECK(compose_fp(P, nc_to_fp(P, b), nc_to_fp(P, a)) ==
                    nc_to_fp(P, compose_nc(b, a)));
  }

  SUBCASE("identities correspond") {
    for (int n = 0; n <= 4; ++n) CHECK(identity_fp(P, n) == nc_to_fp(P, NcMap::identity(n)));
  }
}

TEST_CASE("over the terminal operad only the underlying map remains") {
  const SetOperad P = com_operad(5);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const auto maps = all_fp_morphisms(P, n, m);
      CHECK(maps.size() == all_set_maps(n, m).size());
      for (const auto& a : maps)
        CHECK(a.omega == std::vector<long long>(m, 0));
    }
  for (int m = 0; m <= 2; ++m)
    for (int k = 0; k <= 2; ++k)
      for (const auto& a : all_fp_morphisms(P, 2, m))
        for (const auto& b : all_fp_morphisms(P, m, k))
          CHECK(compose_fp(P, b, a).f == compose_set(b.f, a.f));
}

TEST_CASE("composition of twisted maps is associative and unital") {
  const SetOperad P = as_operad(6);
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m)
      for (const auto& a : all_fp_morphisms(P, n, m)) {
        CHECK(compose_fp(P, identity_fp(P, m), a) == a);
        CHECK(compose_fp(P, a, identity_fp(P, n)) == a);
      }
  for (const auto& a : all_fp_morphisms(P, 2, 2))
    for (const auto& b : all_fp_morphisms(P, 2, 1))
      for (const auto& c : all_fp_morphisms(P, 1, 2))
        CHECK(compose_fp(P, c, compose_fp(P, b, a)) ==
              compose_fp(P, compose_fp(P, c, b), a));
}

TEST_CASE("pullback squares of a plain map against a twisted map") {
  const SetOperad P = as_operad(6);

  SUBCASE("the middle set enumerates matching pairs and copies the twists") {
    for (int v = 0; v <= 2; ++v)
      for (int t = 0; t <= 2; ++t)
        for (int s = 0; s <= 2; ++s)
          for (const auto& f : all_set_maps(t, v))
            for (const auto& phi : all_fp_morphisms(P, s, v)) {
              const FpSquare b = pullback_fp2(P, f, phi);
              CHECK(is_fp2_square(P, b));
              long long pairs = 0;
              for (int x = 1; x <= s; ++x)
                for (int y = 1; y <= t; ++y)
                  if (phi.f(x) == f(y)) ++pairs;
              CHECK(b.f1.n == pairs);
            }
  }

  SUBCASE("pulling back along an identity changes nothing") {
    for (const auto& phi : all_fp_morphisms(P, 3, 2)) {
      const FpSquare b = pullback_fp2(P, FinSetMap::identity(2), phi);
      CHECK(b.f1 == FinSetMap::identity(3));
      CHECK(b.phi1 == phi);
    }
  }

  SUBCASE("broken data is recognized") {
    const FPMorphism phi = nc_to_fp(P, NcMap(2, 1, {{2, 1}}));
    const FinSetMap f(2, 1, {1, 1});
    FpSquare b = pullback_fp2(P, f, phi);
    REQUIRE(is_fp2_square(P, b));
    FpSquare wrong_twist = b;
    wrong_twist.phi1.omega[0] = 1 - wrong_twist.phi1.omega[0];
    CHECK_FALSE(is_fp2_square(P, wrong_twist));
    FpSquare not_pullback = b;
    not_pullback.f1 = FinSetMap(4, 2, {1, 1, 1, 1});  // hits the pair (1, 1) twice
    CHECK_FALSE(is_fp2_square(P, not_pullback));
  }
}

TEST_CASE("renaming the middle of a twisted span adjusts the twists consistently") {
  const SetOperad P = as_operad(6);

  SUBCASE("a worked renaming") {
    // vertical fiber sequence (2, 3, 1); renaming 1 -> 2, 2 -> 3, 3 -> 1
    const FpSpan s =
        make_fp_span(P, 1, 2, nc_to_fp(P, NcMap(3, 1, {{2, 3, 1}})), FinSetMap(3, 2, {1, 2, 2}));
    const FpSpan r = relabel_fp_span(P, s, Permutation({2, 3, 1}));
    CHECK(r.phi.omega == std::vector<long long>{rank_of({2, 3, 1})});
    CHECK(r.f.values == std::vector<int>{2, 1, 2});
    CHECK(span_of(P, r) == relabel_mid(span_of(P, s), Permutation({2, 3, 1})));
  }

  SUBCASE("renaming commutes with the ordered-fiber description") {
    for (const auto& raw : all_spans(DoubleKind::Fas2, 2, 2, 3)) {
      const FpSpan s = fp_of(P, raw);
      for (const auto& rho : all_permutations(s.mid)) {
        const FpSpan r = relabel_fp_span(P, s, rho);
        CHECK(span_of(P, r) == relabel_mid(raw, rho));
        CHECK(normalize_fp(P, r) == normalize_fp(P, s));
      }
    }
  }
}

TEST_CASE("twisted spans over the orderings operad mirror the ordered-fiber spans") {
  const SetOperad P = as_operad(8);

  SUBCASE("normal forms are in bijection") {
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m) {
        const auto ordered = all_spans(DoubleKind::Fas2, n, m, 3);
        const auto twisted = all_fp_spans(P, n, m, 3);
        CHECK(ordered.size() == twisted.size());
        std::set<std::tuple<int, std::vector<int>, std::vector<long long>, std::vector<int>>>
            from_ordered;
        for (const auto& s : ordered)
          CHECK(from_ordered.insert(key_of(normalize_fp(P, fp_of(P, s)))).second);
        for (const auto& s : twisted) CHECK(from_ordered.count(key_of(s)) == 1);
      }
  }

  SUBCASE("composition corresponds") {
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
          for (const auto& a : all_spans(DoubleKind::Fas2, n, m, 3))
            for (const auto& b : all_spans(DoubleKind::Fas2, m, k, 2)) {
              const FpSpan direct = compose_span_fp2(P, fp_of(P, b), fp_of(P, a));
              CHECK(direct == normalize_fp(P, fp_of(P, compose_span(b, a))));
            }
  }

  SUBCASE("identity spans are neutral") {
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m)
        for (const auto& s : all_fp_spans(P, n, m, 3)) {
          CHECK(compose_span_fp2(P, identity_fp_span(P, m), s) == s);
          CHECK(compose_span_fp2(P, s, identity_fp_span(P, n)) == s);
        }
  }
}

TEST_CASE("over the terminal operad spans compose like plain-set spans") {
  const SetOperad P = com_operad(6);
  // the one check the twists cannot see: middles and legs match the plain kind
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      const auto twisted = all_fp_spans(P, n, m, 3);
      const auto plain = all_spans(DoubleKind::F, n, m, 3);
      CHECK(twisted.size() == plain.size());
    }
  for (const auto& a : all_fp_spans(P, 2, 2, 2))
    for (const auto& b : all_fp_spans(P, 2, 2, 2)) {
      const FpSpan c = compose_span_fp2(P, b, a);
      // mirror on plain spans through the forgetful description
      const Span pa = make_span(DoubleKind::F, lift_set_map(a.phi.f), lift_set_map(a.f));
      const Span pb = make_span(DoubleKind::F, lift_set_map(b.phi.f), lift_set_map(b.f));
      const Span pc = compose_span(pb, pa);
      CHECK(c.mid == pc.mid);
      CHECK(c.phi.omega == std::vector<long long>(c.src, 0));
      // same multiset of (phi-value, f-value) labels on the middle
      std::multiset<std::pair<int, int>> lhs, rhs;
      for (int u = 1; u <= c.mid; ++u) lhs.insert({c.phi.f(u), c.f(u)});
      for (int u = 1; u <= pc.mid; ++u) rhs.insert({pc.phi.underlying()(u), pc.f.underlying()(u)});
      CHECK(lhs == rhs);
    }
}

TEST_CASE("spans out of a point carry free-algebra elements") {
  const SetOperad P = as_operad(6);
  const SetOperad C = com_operad(6);

  SUBCASE("a single strand names its image point") {
    const FpSpan s = make_fp_span(P, 1, 3, identity_fp(P, 1), FinSetMap(1, 3, {2}));
    const FreeElement e = span_to_free(P, s);
    CHECK(e == FreeElement{1, 0, {2}, 3});
  }

  SUBCASE("renaming the middle does not change the element") {
    for (const auto& raw : all_spans(DoubleKind::Fas2, 1, 2, 3)) {
      const FpSpan s = fp_of(P, raw);
      const FreeElement e = span_to_free(P, s);
      for (const auto& rho : all_permutations(s.mid))
        CHECK(span_to_free(P, relabel_fp_span(P, s, rho)) == e);
    }
  }

  SUBCASE("over the orderings operad the elements are words in the points") {
    for (int letters = 1; letters <= 3; ++letters)
      for (int len = 0; len <= 3; ++len) {
        std::set<std::vector<int>> words;
        for (const auto& raw : all_spans(DoubleKind::Fas2, 1, letters, 4)) {
          if (raw.mid != len) continue;
          const FreeElement e = span_to_free(P, fp_of(P, raw));
          // read the word two ways: from the canonical element ...
          const Permutation inv = perm_unrank(e.arity, e.element).inverse();
          std::vector<int> word(e.arity);
          for (int p = 1; p <= e.arity; ++p) word[p - 1] = e.points[inv(p) - 1];
          // ... and straight off the ordered vertical fiber
          std::vector<int> direct;
          for (int u : raw.phi.fiber(1)) direct.push_back(raw.f.underlying()(u));
          CHECK(word == direct);
          CHECK(words.insert(word).second);  // distinct spans give distinct words
        }
        long long expected = 1;
        for (int i = 0; i < len; ++i) expected *= letters;
        CHECK(static_cast<long long>(words.size()) == expected);
      }
  }

  SUBCASE("over the terminal operad the elements are multisets of points") {
    for (int len = 0; len <= 3; ++len) {
      std::set<std::vector<int>> elements;
      for (const auto& s : all_fp_spans(C, 1, 2, 4)) {
        if (s.mid != len) continue;
        const FreeElement e = span_to_free(C, s);
        std::vector<int> sorted = e.points;
        CHECK(std::is_sorted(sorted.begin(), sorted.end()));  // canonical tuple
        elements.insert(sorted);
      }
      CHECK(static_cast<int>(elements.size()) == len + 1);  // multisets of {1,2}
    }
  }

  SUBCASE("only spans out of the one-point object qualify") {
    const FpSpan s = identity_fp_span(P, 2);
    CHECK_THROWS_AS(span_to_free(P, s), std::invalid_argument);
  }
}
