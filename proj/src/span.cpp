#include "qprop/span.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace qprop {

namespace {

void check_legs(const NcMap& phi, const NcMap& f) {
  if (phi.source_size() != f.source_size())
    throw std::invalid_argument("span legs must share their source");
}

// rank (1-based position) of every element inside its own fiber
std::vector<int> fiber_ranks(const NcMap& m) {
  std::vector<int> rank(m.source_size(), 0);
  for (int j = 1; j <= m.target_size(); ++j) {
    const auto& fib = m.fiber(j);
    for (std::size_t k = 0; k < fib.size(); ++k) rank[fib[k] - 1] = static_cast<int>(k) + 1;
  }
  return rank;
}

NcMap relabel_leg(const NcMap& leg, const std::vector<int>& new_label, bool ordered) {
  std::vector<std::vector<int>> fibers(leg.target_size());
  for (int j = 1; j <= leg.target_size(); ++j) {
    for (int u : leg.fiber(j)) fibers[j - 1].push_back(new_label[u - 1]);
    if (!ordered) std::sort(fibers[j - 1].begin(), fibers[j - 1].end());
  }
  return NcMap(leg.source_size(), leg.target_size(), std::move(fibers));
}

NcMap compose_leg(const NcMap& outer, const NcMap& inner, bool ordered) {
  if (ordered) return compose_nc(outer, inner);
  return lift_set_map(compose_set(outer.underlying(), inner.underlying()));
}

}  // namespace

Span make_span(DoubleKind kind, const NcMap& phi, const NcMap& f) {
  check_legs(phi, f);
  Span s;
  s.kind = kind;
  s.src = phi.target_size();
  s.dst = f.target_size();
  s.mid = phi.source_size();
  s.phi = phi;
  s.f = f;
  return s;
}

Span normalize(const Span& raw) {
  check_legs(raw.phi, raw.f);
  const int mid = raw.phi.source_size();
  const std::vector<int> phi_rank = fiber_ranks(raw.phi);
  const std::vector<int> f_rank = fiber_ranks(raw.f);

  std::vector<std::array<int, 3>> key(mid);
  for (int u = 1; u <= mid; ++u) {
    switch (raw.kind) {
      case DoubleKind::Fas:
      case DoubleKind::Fas2:
        key[u - 1] = {raw.phi.apply(u), phi_rank[u - 1], 0};
        break;
      case DoubleKind::Fas1:
        key[u - 1] = {raw.phi.apply(u), raw.f.apply(u), f_rank[u - 1]};
        break;
      case DoubleKind::F:
        key[u - 1] = {raw.phi.apply(u), raw.f.apply(u), u};
        break;
    }
  }
  std::vector<int> order(mid);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key[a - 1] < key[b - 1]; });
  std::vector<int> new_label(mid);
  for (int pos = 1; pos <= mid; ++pos) new_label[order[pos - 1] - 1] = pos;

  Span out;
  out.kind = raw.kind;
  out.src = raw.phi.target_size();
  out.dst = raw.f.target_size();
  out.mid = mid;
  out.phi = relabel_leg(raw.phi, new_label, vertical_ordered(raw.kind));
  out.f = relabel_leg(raw.f, new_label, horizontal_ordered(raw.kind));
  return out;
}

Span relabel_mid(const Span& s, const Permutation& h) {
  if (h.degree() != s.mid)
    throw std::invalid_argument("relabel_mid: permutation degree must equal the middle size");
  Span out = s;
  out.phi = relabel_leg(s.phi, h.images(), vertical_ordered(s.kind));
  out.f = relabel_leg(s.f, h.images(), horizontal_ordered(s.kind));
  return out;
}

Span identity_span(DoubleKind kind, int n) {
  return make_span(kind, NcMap::identity(n), NcMap::identity(n));
}

Span compose_span(const Span& second, const Span& first) {
  if (second.kind != first.kind)
    throw std::invalid_argument("compose_span: kinds do not match");
  if (first.dst != second.src)
    throw std::invalid_argument("compose_span: objects do not match");
  const Bimorphism b = pullback(first.kind, first.f, second.phi);
  Span out;
  out.kind = first.kind;
  out.phi = compose_leg(first.phi, b.phi1, vertical_ordered(first.kind));
  out.f = compose_leg(second.f, b.f1, horizontal_ordered(first.kind));
  out.src = first.src;
  out.dst = second.dst;
  out.mid = out.phi.source_size();
  return normalize(out);
}

Span i_star(DoubleKind kind, const NcMap& f) {
  return normalize(make_span(kind, NcMap::identity(f.source_size()), f));
}

Span i_costar(DoubleKind kind, const NcMap& phi) {
  return normalize(make_span(kind, phi, NcMap::identity(phi.source_size())));
}

Span span_disjoint_union(const Span& a, const Span& b) {
  if (a.kind != b.kind)
    throw std::invalid_argument("span_disjoint_union: kinds do not match");
  return normalize(make_span(a.kind, disjoint_union_nc(a.phi, b.phi),
                             disjoint_union_nc(a.f, b.f)));
}

std::pair<Span, Span> zero_object_morphisms(DoubleKind kind, int n, int m) {
  const NcMap to_zero(0, 0, {});
  const NcMap from_n(0, n, std::vector<std::vector<int>>(n));
  const NcMap from_m(0, m, std::vector<std::vector<int>>(m));
  return {make_span(kind, from_n, to_zero), make_span(kind, to_zero, from_m)};
}

EndoPair endo_compose(const EndoPair& a, const EndoPair& b) {
  return {a.n * b.n, phi_compose(a.sigma, b.sigma)};
}

Span endo_to_span(const EndoPair& e) {
  if (e.sigma.degree() != e.n)
    throw std::invalid_argument("endo pair: permutation degree must equal n");
  return normalize(make_span(DoubleKind::Fas, perm_to_fold(e.sigma),
                             perm_to_fold(Permutation::identity(e.n))));
}

std::vector<Span> all_spans(DoubleKind kind, int n, int m, int max_mid) {
  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  const auto valid_leg = [](const NcMap& leg, bool ordered) {
    return ordered || leg == lift_set_map(leg.underlying());
  };
  std::vector<Span> out;
  std::set<Key> seen;
  for (int u = 0; u <= max_mid; ++u) {
    for (const auto& phi : all_nc_maps(u, n)) {
      if (!valid_leg(phi, vertical_ordered(kind))) continue;
      for (const auto& f : all_nc_maps(u, m)) {
        if (!valid_leg(f, horizontal_ordered(kind))) continue;
        Span nf = normalize(make_span(kind, phi, f));
        if (seen.insert({nf.phi.fibers(), nf.f.fibers()}).second) out.push_back(nf);
      }
    }
  }
  return out;
}

EndoPair endo_from_span(const Span& s) {
  if (s.kind != DoubleKind::Fas)
    throw std::invalid_argument("endo_from_span: span must have ordered legs");
  if (s.src != 1 || s.dst != 1)
    throw std::invalid_argument("endo_from_span: span must run from 1 to 1");
  const int n = s.mid;
  std::vector<int> rank(n, 0);  // position inside the f-fiber
  const auto& f_fiber = s.f.fiber(1);
  for (int k = 1; k <= n; ++k) rank[f_fiber[k - 1] - 1] = k;
  std::vector<int> images;
  images.reserve(n);
  for (int u : s.phi.fiber(1)) images.push_back(rank[u - 1]);
  return {n, Permutation(std::move(images))};
}

}  // namespace qprop
