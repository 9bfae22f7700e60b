#include "qprop/doublecat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace qprop {

bool horizontal_ordered(DoubleKind k) {
  return k == DoubleKind::Fas || k == DoubleKind::Fas1;
}

bool vertical_ordered(DoubleKind k) {
  return k == DoubleKind::Fas || k == DoubleKind::Fas2;
}

std::string kind_name(DoubleKind k) {
  switch (k) {
    case DoubleKind::F: return "F";
    case DoubleKind::Fas: return "Fas";
    case DoubleKind::Fas1: return "Fas1";
    case DoubleKind::Fas2: return "Fas2";
  }
  throw std::invalid_argument("unknown kind");
}

DoubleKind kind_from_name(const std::string& name) {
  if (name == "F") return DoubleKind::F;
  if (name == "Fas") return DoubleKind::Fas;
  if (name == "Fas1") return DoubleKind::Fas1;
  if (name == "Fas2") return DoubleKind::Fas2;
  throw std::invalid_argument("unknown kind name: '" + name + "'");
}

namespace {

bool fibers_increasing(const NcMap& m) {
  for (int j = 1; j <= m.target_size(); ++j)
    if (!std::is_sorted(m.fiber(j).begin(), m.fiber(j).end())) return false;
  return true;
}

}  // namespace

Bimorphism pullback(DoubleKind kind, const NcMap& f, const NcMap& phi) {
  if (f.target_size() != phi.target_size())
    throw std::invalid_argument("pullback: legs must share their target");
  if (!horizontal_ordered(kind) && !fibers_increasing(f))
    throw std::invalid_argument("pullback: horizontal leg must be a plain set map for this kind");
  if (!vertical_ordered(kind) && !fibers_increasing(phi))
    throw std::invalid_argument("pullback: vertical leg must be a plain set map for this kind");

  const int size_t_ = f.source_size();
  const int size_s = phi.source_size();
  // label(t, s), assigned in the canonical enumeration order
  std::map<std::pair<int, int>, int> label;
  int next = 0;
  for (int s = 1; s <= size_s; ++s)
    for (int t : f.fiber(phi.apply(s))) label[{t, s}] = ++next;

  std::vector<std::vector<int>> f1_fibers(size_s);
  for (int s = 1; s <= size_s; ++s)
    for (int t : f.fiber(phi.apply(s))) f1_fibers[s - 1].push_back(label[{t, s}]);

  std::vector<std::vector<int>> phi1_fibers(size_t_);
  for (int t = 1; t <= size_t_; ++t)
    for (int s : phi.fiber(f.apply(t))) phi1_fibers[t - 1].push_back(label[{t, s}]);

  Bimorphism b;
  b.kind = kind;
  b.f1 = NcMap(next, size_s, std::move(f1_fibers));
  b.phi1 = NcMap(next, size_t_, std::move(phi1_fibers));
  b.f = f;
  b.phi = phi;
  return b;
}

bool is_bimorphism(const Bimorphism& b) {
  const NcMap& f1 = b.f1;
  const NcMap& phi1 = b.phi1;
  const NcMap& f = b.f;
  const NcMap& phi = b.phi;

  // shape
  if (f1.source_size() != phi1.source_size()) return false;
  if (f1.target_size() != phi.source_size()) return false;
  if (phi1.target_size() != f.source_size()) return false;
  if (f.target_size() != phi.target_size()) return false;

  // plain-set legs must carry the canonical increasing ordering
  if (!horizontal_ordered(b.kind) && !(fibers_increasing(f) && fibers_increasing(f1)))
    return false;
  if (!vertical_ordered(b.kind) && !(fibers_increasing(phi) && fibers_increasing(phi1)))
    return false;

  // the underlying square commutes and is a pullback of sets: u -> (phi1 u, f1 u)
  // must be a bijection onto the fiber product
  const int mid = f1.source_size();
  std::map<std::pair<int, int>, int> hits;
  for (int u = 1; u <= mid; ++u) {
    const int t = phi1.apply(u);
    const int s = f1.apply(u);
    if (f.apply(t) != phi.apply(s)) return false;  // does not commute
    ++hits[{t, s}];
  }
  long long pairs = 0;
  for (int t = 1; t <= f.source_size(); ++t)
    for (int s = 1; s <= phi.source_size(); ++s)
      if (f.apply(t) == phi.apply(s)) {
        ++pairs;
        auto it = hits.find({t, s});
        if (it == hits.end() || it->second != 1) return false;
      }
  if (pairs != mid) return false;

  // order isomorphism on vertical fibers: f1 along a phi1-fiber = phi-fiber
  if (vertical_ordered(b.kind)) {
    for (int t = 1; t <= f.source_size(); ++t) {
      const std::vector<int>& expect = phi.fiber(f.apply(t));
      const std::vector<int>& got = phi1.fiber(t);
      if (got.size() != expect.size()) return false;
      for (std::size_t k = 0; k < got.size(); ++k)
        if (f1.apply(got[k]) != expect[k]) return false;
    }
  }
  // order isomorphism on horizontal fibers: phi1 along an f1-fiber = f-fiber
  if (horizontal_ordered(b.kind)) {
    for (int s = 1; s <= phi.source_size(); ++s) {
      const std::vector<int>& expect = f.fiber(phi.apply(s));
      const std::vector<int>& got = f1.fiber(s);
      if (got.size() != expect.size()) return false;
      for (std::size_t k = 0; k < got.size(); ++k)
        if (phi1.apply(got[k]) != expect[k]) return false;
    }
  }
  return true;
}

bool is_elementary_bimorphism(const Bimorphism& b) {
  return is_elementary_surjection(b.f) && is_elementary_surjection(b.phi);
}

}  // namespace qprop
