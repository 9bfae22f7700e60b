#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "qprop/span.hpp"

using namespace qprop;

namespace {

using SpanKey = std::tuple<int, int, int, std::vector<std::vector<int>>,
                           std::vector<std::vector<int>>>;

SpanKey key_of(const Span& s) {
  return {s.src, s.dst, s.mid, s.phi.fibers(), s.f.fibers()};
}

bool leg_ok(const NcMap& leg, bool ordered) {
  return ordered || leg == lift_set_map(leg.underlying());
}

// all valid middles phi: u -> n, f: u -> m for the given kind
std::vector<Span> raw_spans(DoubleKind kind, int n, int m, int max_mid) {
  std::vector<Span> out;
  for (int u = 0; u <= max_mid; ++u) {
    for (const auto& phi : all_nc_maps(u, n)) {
      if (!leg_ok(phi, vertical_ordered(kind))) continue;
      for (const auto& f : all_nc_maps(u, m)) {
        if (!leg_ok(f, horizontal_ordered(kind))) continue;
        out.push_back(make_span(kind, phi, f));
      }
    }
  }
  return out;
}

std::vector<Span> normal_spans(DoubleKind kind, int n, int m, int max_mid) {
  std::vector<Span> out;
  std::set<SpanKey> seen;
  for (const auto& s : raw_spans(kind, n, m, max_mid)) {
    Span nf = normalize(s);
    if (seen.insert(key_of(nf)).second) out.push_back(nf);
  }
  return out;
}

// least serialization over all relabelings of the middle: an
// implementation-independent orbit invariant
SpanKey orbit_min(const Span& s) {
  bool first = true;
  SpanKey best;
  for (const auto& h : all_permutations(s.mid)) {
    SpanKey k = key_of(relabel_mid(s, h));
    if (first || k < best) {
      best = k;
      first = false;
    }
  }
  return best;
}

const DoubleKind kAllKinds[] = {DoubleKind::F, DoubleKind::Fas, DoubleKind::Fas1,
                                DoubleKind::Fas2};

}  // namespace

TEST_CASE("normalize drops the permutation of the middle") {
  const Span raw = make_span(DoubleKind::Fas, perm_to_fold(Permutation({2, 1})),
                             perm_to_fold(Permutation::identity(2)));
  const Span nf = normalize(raw);
  CHECK(nf.phi == NcMap(2, 1, {{1, 2}}));
  CHECK(nf.f == NcMap(2, 1, {{2, 1}}));
  CHECK(normalize(nf) == nf);
}

TEST_CASE("normalize is constant exactly on relabeling orbits") {
  for (auto kind : kAllKinds) {
    std::map<SpanKey, SpanKey> rep;  // normal form -> orbit invariant
    for (const auto& s : raw_spans(kind, 2, 2, 3)) {
      const Span nf = normalize(s);
      CHECK(normalize(nf) == nf);
      // every relabeling of s reaches the same normal form
      for (const auto& h : all_permutations(s.mid))
        CHECK(normalize(relabel_mid(s, h)) == nf);
      // distinct orbits get distinct normal forms
      const SpanKey inv = orbit_min(s);
      auto [it, fresh] = rep.emplace(key_of(nf), inv);
      if (!fresh) CHECK(it->second == inv);
    }
    std::set<SpanKey> invs;
    for (const auto& [nf, inv] : rep) invs.insert(inv);
    CHECK(invs.size() == rep.size());
  }
}

TEST_CASE("identity spans are neutral for composition") {
  for (auto kind : kAllKinds)
    for (const auto& s : normal_spans(kind, 2, 3, 3)) {
      CHECK(compose_span(identity_span(kind, 3), s) == s);
      CHECK(compose_span(s, identity_span(kind, 2)) == s);
    }
}

TEST_CASE("composition of spans is associative") {
  for (auto kind : kAllKinds) {
    const auto spans = normal_spans(kind, 2, 2, 2);
    for (const auto& a : spans)
      for (const auto& b : spans)
        for (const auto& c : spans)
          CHECK(compose_span(a, compose_span(b, c)) ==
                compose_span(compose_span(a, b), c));
  }
}

TEST_CASE("composition rejects mismatched kinds and objects") {
  const Span a = identity_span(DoubleKind::Fas, 2);
  CHECK_THROWS_AS(compose_span(a, identity_span(DoubleKind::F, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose_span(a, identity_span(DoubleKind::Fas, 3)),
                  std::invalid_argument);
}

TEST_CASE("horizontal embedding is a functor") {
  for (auto kind : {DoubleKind::Fas, DoubleKind::F}) {
    const bool ordered = horizontal_ordered(kind);
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= 3; ++k)
          for (const auto& f : all_nc_maps(n, m)) {
            if (!leg_ok(f, ordered)) continue;
            for (const auto& g : all_nc_maps(m, k)) {
              if (!leg_ok(g, ordered)) continue;
              CHECK(compose_span(i_star(kind, g), i_star(kind, f)) ==
                    i_star(kind, compose_nc(g, f)));
            }
          }
    CHECK(i_star(kind, NcMap::identity(2)) == identity_span(kind, 2));
  }
}

TEST_CASE("vertical embedding is contravariant") {
  for (auto kind : {DoubleKind::Fas, DoubleKind::F}) {
    const bool ordered = vertical_ordered(kind);
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= 3; ++k)
          for (const auto& phi : all_nc_maps(n, m)) {
            if (!leg_ok(phi, ordered)) continue;
            for (const auto& psi : all_nc_maps(m, k)) {
              if (!leg_ok(psi, ordered)) continue;
              CHECK(compose_span(i_costar(kind, phi), i_costar(kind, psi)) ==
                    i_costar(kind, compose_nc(psi, phi)));
            }
          }
    CHECK(i_costar(kind, NcMap::identity(2)) == identity_span(kind, 2));
  }
}

TEST_CASE("the empty object is a zero object") {
  for (auto kind : kAllKinds) {
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        auto [to_zero, from_zero] = zero_object_morphisms(kind, n, m);
        CHECK(to_zero.mid == 0);
        CHECK(from_zero.mid == 0);
        // the only span through an empty middle
        CHECK(normal_spans(kind, n, 0, 3) == std::vector<Span>{to_zero});
        CHECK(normal_spans(kind, 0, m, 3) == std::vector<Span>{from_zero});
        const Span through = compose_span(from_zero, to_zero);
        CHECK(through.mid == 0);
        CHECK(through.src == n);
        CHECK(through.dst == m);
      }
    }
  }
}

TEST_CASE("disjoint union of spans is monoidal") {
  for (auto kind : kAllKinds) {
    const auto spans = normal_spans(kind, 2, 2, 2);
    const Span unit = identity_span(kind, 0);
    for (const auto& a : spans) {
      CHECK(span_disjoint_union(a, unit) == a);
      CHECK(span_disjoint_union(unit, a) == a);
      for (const auto& b : spans) {
        // interchange with composition
        CHECK(span_disjoint_union(compose_span(a, b), compose_span(b, a)) ==
              compose_span(span_disjoint_union(a, b), span_disjoint_union(b, a)));
      }
    }
  }
}

TEST_CASE("plain fold spans multiply the middle sizes") {
  const Span three = normalize(make_span(DoubleKind::F, lift_set_map(FinSetMap(3, 1, {1, 1, 1})),
                                         lift_set_map(FinSetMap(3, 1, {1, 1, 1}))));
  const Span two = normalize(make_span(DoubleKind::F, lift_set_map(FinSetMap(2, 1, {1, 1})),
                                       lift_set_map(FinSetMap(2, 1, {1, 1}))));
  const Span six = compose_span(two, three);
  CHECK(six.mid == 6);
  CHECK(six.src == 1);
  CHECK(six.dst == 1);
}

TEST_CASE("endomorphism pairs round-trip through spans") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& sigma : all_permutations(n)) {
      const EndoPair e{n, sigma};
      const Span s = endo_to_span(e);
      CHECK(s.kind == DoubleKind::Fas);
      CHECK(s.src == 1);
      CHECK(s.dst == 1);
      CHECK(s.mid == n);
      CHECK(normalize(s) == s);
      CHECK(endo_from_span(s) == e);
    }
  }
  // the order-reversing pair corresponds to the span with trivial vertical
  // leg and reversed horizontal fiber
  const Span s = endo_to_span(EndoPair{2, Permutation({2, 1})});
  CHECK(s.phi == NcMap(2, 1, {{1, 2}}));
  CHECK(s.f == NcMap(2, 1, {{2, 1}}));
  CHECK(s == normalize(make_span(DoubleKind::Fas, perm_to_fold(Permutation({2, 1})),
                                 perm_to_fold(Permutation::identity(2)))));
}

TEST_CASE("endo_from_span validates its input") {
  CHECK_THROWS_AS(endo_from_span(identity_span(DoubleKind::F, 1)), std::invalid_argument);
  CHECK_THROWS_AS(endo_from_span(identity_span(DoubleKind::Fas, 2)), std::invalid_argument);
}

TEST_CASE("span composition realizes the closed composition formula") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m)) {
          const EndoPair a{n, sigma};
          const EndoPair b{m, tau};
          const EndoPair ab = endo_compose(a, b);
          CHECK(ab.n == n * m);
          CHECK(compose_span(endo_to_span(a), endo_to_span(b)) == endo_to_span(ab));
        }
}
