#pragma once

#include <vector>

#include "qprop/perm.hpp"

namespace qprop {

// A plain map of finite sets {1..n} -> {1..m}: values[i-1] is the image of i.
struct FinSetMap {
  int n = 0;
  int m = 0;
  std::vector<int> values;

  FinSetMap() = default;
  FinSetMap(int n, int m, std::vector<int> values);
  static FinSetMap identity(int n);

  int operator()(int i) const { return values[i - 1]; }
  friend bool operator==(const FinSetMap&, const FinSetMap&) = default;
};

// g after f.
FinSetMap compose_set(const FinSetMap& g, const FinSetMap& f);
FinSetMap set_map_of_perm(const Permutation& p);

// A map of finite sets together with a total order on every fiber.
// fiber(j) lists the preimage of j as an ordered sequence; the sequences are
// pairwise disjoint and jointly cover {1..n}. Empty fibers are kept
// explicitly: they matter for evaluation (empty product = unit).
class NcMap {
 public:
  NcMap() = default;
  NcMap(int source_size, int target_size, std::vector<std::vector<int>> fibers);
  static NcMap identity(int n);

  int source_size() const { return n_; }
  int target_size() const { return m_; }
  const std::vector<int>& fiber(int j) const { return fibers_[j - 1]; }
  const std::vector<std::vector<int>>& fibers() const { return fibers_; }
  int apply(int u) const { return values_[u - 1]; }  // underlying map
  FinSetMap underlying() const;

  friend bool operator==(const NcMap& a, const NcMap& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.fibers_ == b.fibers_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> fibers_;
  std::vector<int> values_;  // cached underlying map
};

// The fiber of the composite over i is the concatenation of f's fibers over
// j, with j running along g's ordered fiber of i.
NcMap compose_nc(const NcMap& g, const NcMap& f);

// Canonical lift of a plain set map: every fiber ordered increasingly. For
// injections this is the only possible lift.
NcMap lift_set_map(const FinSetMap& f);

// Block sum: the second map's elements and targets are shifted; fiber
// orderings are inherited blockwise.
NcMap disjoint_union_nc(const NcMap& f, const NcMap& g);

// The fold map n -> 1 whose single fiber is [sigma(1), ..., sigma(n)].
NcMap perm_to_fold(const Permutation& sigma);

bool is_surjection(const NcMap& f);
bool is_injection(const NcMap& f);
// Surjective with source size - target size <= 1.
bool is_elementary_surjection(const NcMap& f);

// Exhaustive enumerations used by the verification suites.
std::vector<FinSetMap> all_set_maps(int n, int m);
std::vector<NcMap> all_nc_maps(int n, int m);

}  // namespace qprop
