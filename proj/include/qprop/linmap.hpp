#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qprop/perm.hpp"
#include "qprop/rational.hpp"

namespace qprop {

using Index = std::uint64_t;

// dim^n, with an overflow guard.
Index power_size(int dim, int n);

// A basis vector of the n-th tensor power of a dim-dimensional space is a
// tuple of n digits in 0..dim-1; tensor factor 1 is the most significant
// digit of the combined index.
std::vector<int> index_to_digits(Index idx, int dim, int n);
Index digits_to_index(const std::vector<int>& digits, int dim);

// An exact-rational linear map between tensor powers of a fixed
// dim-dimensional space, stored as sparse columns.  Zero coefficients are
// never stored, so structural equality is semantic equality.
class LinMap {
 public:
  LinMap() = default;
  LinMap(int dim, int dom_power, int cod_power);  // the zero map

  static LinMap identity(int dim, int power);

  int dim() const { return dim_; }
  int dom_power() const { return dom_power_; }
  int cod_power() const { return cod_power_; }
  Index dom_size() const { return power_size(dim_, dom_power_); }
  Index cod_size() const { return power_size(dim_, cod_power_); }

  void add(Index row, Index col, const Rational& value);
  Rational entry(Index row, Index col) const;
  const std::map<Index, Rational>& column(Index col) const { return cols_.at(col); }

  friend bool operator==(const LinMap&, const LinMap&) = default;

 private:
  int dim_ = 0;
  int dom_power_ = 0;
  int cod_power_ = 0;
  std::vector<std::map<Index, Rational>> cols_;
};

LinMap compose(const LinMap& g, const LinMap& f);  // g after f
LinMap tensor(const LinMap& a, const LinMap& b);   // a on the leading factors

// The map sending basis tuple a to the tuple b with b_i = a_{sigma(i)}:
// factor sigma(i) of the input becomes factor i of the output.
LinMap permute_tensor(const Permutation& sigma, int dim);

}  // namespace qprop
