#include "qprop/ncset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qprop {

FinSetMap::FinSetMap(int n_, int m_, std::vector<int> values_)
    : n(n_), m(m_), values(std::move(values_)) {
  if (n < 0 || m < 0) throw std::invalid_argument("FinSetMap: negative size");
  if (static_cast<int>(values.size()) != n)
    throw std::invalid_argument("FinSetMap: need one value per source element");
  for (int v : values)
    if (v < 1 || v > m) throw std::invalid_argument("FinSetMap: value out of target range");
}

FinSetMap FinSetMap::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return FinSetMap(n, n, std::move(v));
}

FinSetMap compose_set(const FinSetMap& g, const FinSetMap& f) {
  if (f.m != g.n) throw std::invalid_argument("compose_set: sizes do not match");
  std::vector<int> v(f.values.size());
  for (int i = 1; i <= f.n; ++i) v[i - 1] = g(f(i));
  return FinSetMap(f.n, g.m, std::move(v));
}

FinSetMap set_map_of_perm(const Permutation& p) {
  return FinSetMap(p.degree(), p.degree(), p.images());
}

NcMap::NcMap(int source_size, int target_size, std::vector<std::vector<int>> fibers)
    : n_(source_size), m_(target_size), fibers_(std::move(fibers)) {
  if (n_ < 0 || m_ < 0) throw std::invalid_argument("NcMap: negative size");
  if (static_cast<int>(fibers_.size()) != m_)
    throw std::invalid_argument("NcMap: need one fiber per target element");
  values_.assign(n_, 0);
  for (int j = 1; j <= m_; ++j) {
    for (int u : fibers_[j - 1]) {
      if (u < 1 || u > n_) throw std::invalid_argument("NcMap: fiber element out of range");
      if (values_[u - 1] != 0)
        throw std::invalid_argument("NcMap: fibers are not disjoint");
      values_[u - 1] = j;
    }
  }
  for (int u = 1; u <= n_; ++u)
    if (values_[u - 1] == 0)
      throw std::invalid_argument("NcMap: fibers do not cover the source");
}

NcMap NcMap::identity(int n) {
  std::vector<std::vector<int>> fibers(n);
  for (int j = 1; j <= n; ++j) fibers[j - 1] = {j};
  return NcMap(n, n, std::move(fibers));
}

FinSetMap NcMap::underlying() const { return FinSetMap(n_, m_, values_); }

NcMap compose_nc(const NcMap& g, const NcMap& f) {
  if (f.target_size() != g.source_size())
    throw std::invalid_argument("compose_nc: sizes do not match");
  std::vector<std::vector<int>> fibers(g.target_size());
  for (int i = 1; i <= g.target_size(); ++i) {
    for (int j : g.fiber(i))
      for (int u : f.fiber(j)) fibers[i - 1].push_back(u);
  }
  return NcMap(f.source_size(), g.target_size(), std::move(fibers));
}

NcMap lift_set_map(const FinSetMap& f) {
  std::vector<std::vector<int>> fibers(f.m);
  for (int i = 1; i <= f.n; ++i) fibers[f(i) - 1].push_back(i);
  return NcMap(f.n, f.m, std::move(fibers));
}

NcMap disjoint_union_nc(const NcMap& f, const NcMap& g) {
  std::vector<std::vector<int>> fibers;
  fibers.reserve(f.target_size() + g.target_size());
  for (int j = 1; j <= f.target_size(); ++j) fibers.push_back(f.fiber(j));
  for (int j = 1; j <= g.target_size(); ++j) {
    std::vector<int> shifted;
    shifted.reserve(g.fiber(j).size());
    for (int u : g.fiber(j)) shifted.push_back(u + f.source_size());
    fibers.push_back(std::move(shifted));
  }
  return NcMap(f.source_size() + g.source_size(), f.target_size() + g.target_size(),
               std::move(fibers));
}

NcMap perm_to_fold(const Permutation& sigma) {
  return NcMap(sigma.degree(), 1, {sigma.images()});
}

bool is_surjection(const NcMap& f) {
  for (int j = 1; j <= f.target_size(); ++j)
    if (f.fiber(j).empty()) return false;
  return true;
}

bool is_injection(const NcMap& f) {
  for (int j = 1; j <= f.target_size(); ++j)
    if (f.fiber(j).size() > 1) return false;
  return true;
}

bool is_elementary_surjection(const NcMap& f) {
  return is_surjection(f) && f.source_size() - f.target_size() <= 1;
}

std::vector<FinSetMap> all_set_maps(int n, int m) {
  std::vector<FinSetMap> out;
  if (n > 0 && m == 0) return out;  // no maps into the empty set
  std::vector<int> v(n, 1);
  while (true) {
    out.push_back(FinSetMap(n, m, v));
    int i = n - 1;
    while (i >= 0 && v[i] == m) {
      v[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

std::vector<NcMap> all_nc_maps(int n, int m) {
  std::vector<NcMap> out;
  for (const FinSetMap& f : all_set_maps(n, m)) {
    const NcMap base = lift_set_map(f);
    // All orderings of every fiber, as a product over fibers.
    std::vector<std::vector<std::vector<int>>> fiber_orders(m);
    for (int j = 1; j <= m; ++j) {
      std::vector<int> fib = base.fiber(j);
      std::sort(fib.begin(), fib.end());
      do {
        fiber_orders[j - 1].push_back(fib);
      } while (std::next_permutation(fib.begin(), fib.end()));
    }
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<std::vector<int>> fibers(m);
      for (int j = 0; j < m; ++j) fibers[j] = fiber_orders[j][pick[j]];
      out.push_back(NcMap(n, m, std::move(fibers)));
      int j = m - 1;
      while (j >= 0 && pick[j] + 1 == fiber_orders[j].size()) {
        pick[j] = 0;
        --j;
      }
      if (j < 0) break;
      ++pick[j];
    }
  }
  return out;
}

}  // namespace qprop
