#pragma once

#include <string>
#include <vector>

namespace qprop {

// A permutation of {1..n} in one-line notation: images()[i-1] = sigma(i).
class Permutation {
 public:
  Permutation() = default;  // permutation of the empty set
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (*this) after inner: result(i) = (*this)(inner(i)).
  Permutation compose(const Permutation& inner) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

// Block-diagonal juxtaposition: a acts on the first a.degree() letters, b on
// the remaining b.degree() letters (shifted).
Permutation perm_sum(const Permutation& a, const Permutation& b);

// All permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

// Lexicographic rank (0-based) within S_n, and its inverse.
long long perm_rank(const Permutation& p);
Permutation perm_unrank(int n, long long rank);

// One-line notation for the command line: "2 1 3" <-> [2,1,3].
Permutation parse_one_line(const std::string& text);
std::string format_one_line(const Permutation& p);

// The endomorphism-pair composition rule: the permutation of {1..nm} given by
//   x = pn + q  |->  tau(p+1) + m(sigma(q) - 1)
// with 1 <= q <= n, 0 <= p <= m-1, sigma in S_n, tau in S_m.
Permutation phi_compose(const Permutation& sigma, const Permutation& tau);

// Permutation of {1..sum(widths)} that moves source block j (of size
// widths[j-1]) to destination slot sigma(j), preserving the order inside each
// block. Destination slot k has the width of the block sigma sends there.
Permutation block_perm(const Permutation& sigma, const std::vector<int>& widths);

// Operadic composite on permutations: block_perm(sigma, widths) after the
// block-diagonal sum of the parts.
Permutation gamma_perm(const Permutation& sigma, const std::vector<Permutation>& parts);

// Compares the two lexicographic enumerations of {1..n} x {1..m}: in closed
// form, x = pn + q maps to (q-1)m + (p+1).
Permutation transpose_perm(int n, int m);

}  // namespace qprop
