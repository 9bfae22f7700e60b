#include "qprop/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qprop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("one-line notation is not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation degree");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (degree() != inner.degree())
    throw std::invalid_argument("composing permutations of different degrees");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= degree(); ++i) v[i - 1] = images_[inner(i) - 1];
  return Permutation(std::move(v));
}

Permutation perm_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  v.reserve(a.degree() + b.degree());
  for (int x : a.images()) v.push_back(x);
  for (int x : b.images()) v.push_back(x + a.degree());
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

long long perm_rank(const Permutation& p) {
  const int n = p.degree();
  long long rank = 0;
  for (int i = 1; i <= n; ++i) {
    long long smaller_later = 0;
    for (int j = i + 1; j <= n; ++j)
      if (p(j) < p(i)) ++smaller_later;
    long long fact = 1;
    for (int k = 2; k <= n - i; ++k) fact *= k;
    rank += smaller_later * fact;
  }
  return rank;
}

Permutation perm_unrank(int n, long long rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  long long fact = 1;
  for (int k = 2; k <= n; ++k) fact *= k;
  if (rank < 0 || rank >= std::max<long long>(fact, 1))
    throw std::invalid_argument("permutation rank out of range");
  std::vector<int> v;
  v.reserve(n);
  for (int i = n; i >= 1; --i) {
    fact /= std::max(i, 1);
    const long long idx = rank / std::max<long long>(fact, 1);
    rank %= std::max<long long>(fact, 1);
    v.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(v));
}

Permutation parse_one_line(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> v;
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw std::invalid_argument("invalid one-line permutation: '" + text + "'");
  return Permutation(std::move(v));
}

std::string format_one_line(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) out << ' ';
    out << p(i);
  }
  return out.str();
}

Permutation phi_compose(const Permutation& sigma, const Permutation& tau) {
  const int n = sigma.degree();
  const int m = tau.degree();
  std::vector<int> v(static_cast<std::size_t>(n) * m);
  for (int x = 1; x <= n * m; ++x) {
    const int q = (x - 1) % n + 1;
    const int p = (x - 1) / n;
    v[x - 1] = tau(p + 1) + m * (sigma(q) - 1);
  }
  return Permutation(std::move(v));
}

Permutation block_perm(const Permutation& sigma, const std::vector<int>& widths) {
  const int n = sigma.degree();
  if (static_cast<int>(widths.size()) != n)
    throw std::invalid_argument("block_perm: widths do not match the permutation degree");
  int total = 0;
  for (int w : widths) {
    if (w < 0) throw std::invalid_argument("block_perm: negative block width");
    total += w;
  }
  const Permutation inv = sigma.inverse();
  // Start offset of destination slot k: the widths of the blocks landing earlier.
  std::vector<int> dst_start(n + 1, 0);
  int acc = 0;
  for (int k = 1; k <= n; ++k) {
    dst_start[k] = acc;
    acc += widths[inv(k) - 1];
  }
  std::vector<int> v(total);
  int src_start = 0;
  for (int j = 1; j <= n; ++j) {
    const int w = widths[j - 1];
    for (int i = 1; i <= w; ++i) v[src_start + i - 1] = dst_start[sigma(j)] + i;
    src_start += w;
  }
  return Permutation(std::move(v));
}

Permutation gamma_perm(const Permutation& sigma, const std::vector<Permutation>& parts) {
  if (static_cast<int>(parts.size()) != sigma.degree())
    throw std::invalid_argument("gamma_perm: need one part per letter of sigma");
  std::vector<int> widths;
  widths.reserve(parts.size());
  Permutation diag;  // block-diagonal sum of the parts
  for (const Permutation& p : parts) {
    widths.push_back(p.degree());
    diag = perm_sum(diag, p);
  }
  return block_perm(sigma, widths).compose(diag);
}

Permutation transpose_perm(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("transpose_perm: negative size");
  std::vector<int> v(static_cast<std::size_t>(n) * m);
  for (int x = 1; x <= n * m; ++x) {
    const int q = (x - 1) % n + 1;
    const int p = (x - 1) / n;
    v[x - 1] = (q - 1) * m + (p + 1);
  }
  return Permutation(std::move(v));
}

}  // namespace qprop
