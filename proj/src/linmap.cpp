#include "qprop/linmap.hpp"

#include <limits>
#include <stdexcept>

namespace qprop {

Index power_size(int dim, int n) {
  if (dim < 0 || n < 0) throw std::invalid_argument("power_size: negative argument");
  Index out = 1;
  for (int k = 0; k < n; ++k) {
    if (dim != 0 && out > std::numeric_limits<Index>::max() / dim)
      throw std::overflow_error("power_size: tensor power too large");
    out *= static_cast<Index>(dim);
  }
  return out;
}

std::vector<int> index_to_digits(Index idx, int dim, int n) {
  std::vector<int> digits(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(idx % dim);
    idx /= dim;
  }
  if (idx != 0) throw std::invalid_argument("index_to_digits: index out of range");
  return digits;
}

Index digits_to_index(const std::vector<int>& digits, int dim) {
  Index out = 0;
  for (int d : digits) {
    if (d < 0 || d >= dim) throw std::invalid_argument("digits_to_index: digit out of range");
    out = out * dim + d;
  }
  return out;
}

LinMap::LinMap(int dim, int dom_power, int cod_power)
    : dim_(dim), dom_power_(dom_power), cod_power_(cod_power) {
  if (dim < 0 || dom_power < 0 || cod_power < 0)
    throw std::invalid_argument("LinMap: negative shape");
  cols_.resize(dom_size());
}

LinMap LinMap::identity(int dim, int power) {
  LinMap out(dim, power, power);
  for (Index c = 0; c < out.dom_size(); ++c) out.add(c, c, 1);
  return out;
}

void LinMap::add(Index row, Index col, const Rational& value) {
  if (row >= cod_size() || col >= dom_size())
    throw std::out_of_range("LinMap::add: position outside the matrix");
  if (value == 0) return;
  auto& column = cols_[col];
  auto it = column.find(row);
  if (it == column.end()) {
    column.emplace(row, value);
  } else {
    it->second += value;
    if (it->second == 0) column.erase(it);
  }
}

Rational LinMap::entry(Index row, Index col) const {
  const auto& column = cols_.at(col);
  auto it = column.find(row);
  return it == column.end() ? Rational(0) : it->second;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.dim() != f.dim() || g.dom_power() != f.cod_power())
    throw std::invalid_argument("compose: shapes do not match");
  LinMap out(f.dim(), f.dom_power(), g.cod_power());
  for (Index c = 0; c < f.dom_size(); ++c)
    for (const auto& [mid, v] : f.column(c))
      for (const auto& [row, w] : g.column(mid)) out.add(row, c, v * w);
  return out;
}

LinMap tensor(const LinMap& a, const LinMap& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor: dimensions do not match");
  LinMap out(a.dim(), a.dom_power() + b.dom_power(), a.cod_power() + b.cod_power());
  for (Index ca = 0; ca < a.dom_size(); ++ca)
    for (Index cb = 0; cb < b.dom_size(); ++cb)
      for (const auto& [ra, va] : a.column(ca))
        for (const auto& [rb, vb] : b.column(cb))
          out.add(ra * b.cod_size() + rb, ca * b.dom_size() + cb, va * vb);
  return out;
}

LinMap permute_tensor(const Permutation& sigma, int dim) {
  const int n = sigma.degree();
  LinMap out(dim, n, n);
  for (Index c = 0; c < out.dom_size(); ++c) {
    const std::vector<int> in = index_to_digits(c, dim, n);
    std::vector<int> digits(n);
    for (int i = 1; i <= n; ++i) digits[i - 1] = in[sigma(i) - 1];
    out.add(digits_to_index(digits, dim), c, 1);
  }
  return out;
}

}  // namespace qprop
