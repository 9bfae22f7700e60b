#include "qprop/encode.hpp"

#include <stdexcept>

namespace qprop {

namespace {

void require_kind(const Span& s, DoubleKind kind, const char* what) {
  if (s.kind != kind)
    throw std::invalid_argument(std::string(what) + ": span has the wrong kind of legs");
}

}  // namespace

void validate_matrix(const NatMatrix& m) {
  if (m.rows < 0 || m.cols < 0)
    throw std::invalid_argument("matrix: negative dimensions");
  if (static_cast<int>(m.entries.size()) != m.rows)
    throw std::invalid_argument("matrix: row count does not match");
  for (const auto& row : m.entries) {
    if (static_cast<int>(row.size()) != m.cols)
      throw std::invalid_argument("matrix: column count does not match");
    for (long long e : row)
      if (e < 0) throw std::invalid_argument("matrix: negative entry");
  }
}

NatMatrix matrix_multiply(const NatMatrix& a, const NatMatrix& b) {
  validate_matrix(a);
  validate_matrix(b);
  if (a.cols != b.rows)
    throw std::invalid_argument("matrix_multiply: inner dimensions do not match");
  NatMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  out.entries.assign(a.rows, std::vector<long long>(b.cols, 0));
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      for (int j = 0; j < b.cols; ++j) out.entries[i][j] += a.entries[i][k] * b.entries[k][j];
  return out;
}

NatMatrix qf_to_matrix(const Span& s) {
  require_kind(s, DoubleKind::F, "qf_to_matrix");
  NatMatrix out;
  out.rows = s.dst;
  out.cols = s.src;
  out.entries.assign(s.dst, std::vector<long long>(s.src, 0));
  for (int u = 1; u <= s.mid; ++u) ++out.entries[s.f.apply(u) - 1][s.phi.apply(u) - 1];
  return out;
}

Span qf_from_matrix(const NatMatrix& m) {
  validate_matrix(m);
  std::vector<std::vector<int>> phi_fibers(m.cols);
  std::vector<std::vector<int>> f_fibers(m.rows);
  int label = 0;
  for (int j = 0; j < m.cols; ++j) {
    for (int i = 0; i < m.rows; ++i) {
      for (long long c = 0; c < m.entries[i][j]; ++c) {
        ++label;
        phi_fibers[j].push_back(label);
        f_fibers[i].push_back(label);
      }
    }
  }
  return normalize(make_span(DoubleKind::F, NcMap(label, m.cols, std::move(phi_fibers)),
                             NcMap(label, m.rows, std::move(f_fibers))));
}

void validate_words(const WordTuple& w) {
  if (w.m < 0) throw std::invalid_argument("words: negative alphabet size");
  for (const auto& word : w.words)
    for (int letter : word)
      if (letter < 1 || letter > w.m)
        throw std::invalid_argument("words: letter out of range");
}

WordTuple mon_words_of_span(const Span& s) {
  require_kind(s, DoubleKind::Fas2, "mon_words_of_span");
  WordTuple out;
  out.m = s.dst;
  out.words.resize(s.src);
  for (int i = 1; i <= s.src; ++i)
    for (int u : s.phi.fiber(i)) out.words[i - 1].push_back(s.f.apply(u));
  return out;
}

Span mon_span_of_words(const WordTuple& w) {
  validate_words(w);
  const int n = static_cast<int>(w.words.size());
  std::vector<std::vector<int>> phi_fibers(n);
  std::vector<std::vector<int>> f_fibers(w.m);
  int label = 0;
  for (int i = 0; i < n; ++i) {
    for (int letter : w.words[i]) {
      ++label;
      phi_fibers[i].push_back(label);
      f_fibers[letter - 1].push_back(label);
    }
  }
  return normalize(make_span(DoubleKind::Fas2, NcMap(label, n, std::move(phi_fibers)),
                             NcMap(label, w.m, std::move(f_fibers))));
}

void validate_shuffle(const Shuffle& sh) {
  int total = 0;
  for (int a : sh.type) {
    if (a < 0) throw std::invalid_argument("shuffle: negative block size");
    total += a;
  }
  Permutation check(sh.images);  // throws unless a permutation
  if (check.degree() != total)
    throw std::invalid_argument("shuffle: permutation size does not match the type");
  int pos = 0;
  for (int a : sh.type) {
    for (int k = 1; k < a; ++k)
      if (sh.images[pos + k] <= sh.images[pos + k - 1])
        throw std::invalid_argument("shuffle: not increasing within a block");
    pos += a;
  }
}

Shuffle word_to_shuffle(const std::vector<int>& word, int m) {
  Shuffle out;
  out.type.assign(m, 0);
  for (int letter : word) {
    if (letter < 1 || letter > m)
      throw std::invalid_argument("word_to_shuffle: letter out of range");
    ++out.type[letter - 1];
  }
  for (int letter = 1; letter <= m; ++letter)
    for (int pos = 1; pos <= static_cast<int>(word.size()); ++pos)
      if (word[pos - 1] == letter) out.images.push_back(pos);
  return out;
}

std::vector<int> shuffle_to_word(const Shuffle& sh) {
  validate_shuffle(sh);
  std::vector<int> word(sh.images.size(), 0);
  int pos = 0;
  for (int letter = 1; letter <= static_cast<int>(sh.type.size()); ++letter)
    for (int k = 0; k < sh.type[letter - 1]; ++k) word[sh.images[pos++] - 1] = letter;
  return word;
}

void validate_qfas(const QfasEncoding& e) {
  if (e.src < 0 || e.dst < 0) throw std::invalid_argument("encoding: negative sizes");
  if (static_cast<int>(e.entries.size()) != e.dst ||
      static_cast<int>(e.src_shuffles.size()) != e.src ||
      static_cast<int>(e.dst_shuffles.size()) != e.dst)
    throw std::invalid_argument("encoding: field sizes do not match");
  for (const auto& row : e.entries) {
    if (static_cast<int>(row.size()) != e.src)
      throw std::invalid_argument("encoding: entry row size does not match");
    for (const auto& cell : row) {
      if (cell.a < 0) throw std::invalid_argument("encoding: negative cell size");
      if (cell.sigma.degree() != cell.a)
        throw std::invalid_argument("encoding: cell permutation size does not match");
    }
  }
  for (int s = 1; s <= e.src; ++s) {
    validate_shuffle(e.src_shuffles[s - 1]);
    if (static_cast<int>(e.src_shuffles[s - 1].type.size()) != e.dst)
      throw std::invalid_argument("encoding: source shuffle type size does not match");
    for (int d = 1; d <= e.dst; ++d)
      if (e.src_shuffles[s - 1].type[d - 1] != e.entries[d - 1][s - 1].a)
        throw std::invalid_argument("encoding: source shuffle type disagrees with the cells");
  }
  for (int d = 1; d <= e.dst; ++d) {
    validate_shuffle(e.dst_shuffles[d - 1]);
    if (static_cast<int>(e.dst_shuffles[d - 1].type.size()) != e.src)
      throw std::invalid_argument("encoding: target shuffle type size does not match");
    for (int s = 1; s <= e.src; ++s)
      if (e.dst_shuffles[d - 1].type[s - 1] != e.entries[d - 1][s - 1].a)
        throw std::invalid_argument("encoding: target shuffle type disagrees with the cells");
  }
}

QfasEncoding qfas_encode(const Span& s) {
  require_kind(s, DoubleKind::Fas, "qfas_encode");
  QfasEncoding out;
  out.src = s.src;
  out.dst = s.dst;
  out.entries.assign(s.dst, std::vector<QfasEntry>(s.src));

  for (int i = 1; i <= s.src; ++i) {
    std::vector<int> word;
    for (int u : s.phi.fiber(i)) word.push_back(s.f.apply(u));
    out.src_shuffles.push_back(word_to_shuffle(word, s.dst));
  }
  for (int d = 1; d <= s.dst; ++d) {
    std::vector<int> word;
    for (int u : s.f.fiber(d)) word.push_back(s.phi.apply(u));
    out.dst_shuffles.push_back(word_to_shuffle(word, s.src));
  }

  for (int d = 1; d <= s.dst; ++d) {
    for (int i = 1; i <= s.src; ++i) {
      std::vector<int> vertical;  // cell elements in the vertical fiber order
      for (int u : s.phi.fiber(i))
        if (s.f.apply(u) == d) vertical.push_back(u);
      std::vector<int> horizontal;  // the same elements in the horizontal order
      for (int u : s.f.fiber(d))
        if (s.phi.apply(u) == i) horizontal.push_back(u);
      QfasEntry& cell = out.entries[d - 1][i - 1];
      cell.a = static_cast<int>(vertical.size());
      std::vector<int> images(cell.a);
      for (int p = 0; p < cell.a; ++p) {
        for (int r = 0; r < cell.a; ++r)
          if (horizontal[r] == vertical[p]) images[p] = r + 1;
      }
      cell.sigma = Permutation(std::move(images));
    }
  }
  return out;
}

Span qfas_decode(const QfasEncoding& e) {
  validate_qfas(e);
  // Source fibers are consecutive blocks of labels in the vertical order.
  std::vector<int> start(e.src + 1, 1);
  for (int i = 1; i <= e.src; ++i) {
    int len = 0;
    for (int d = 1; d <= e.dst; ++d) len += e.entries[d - 1][i - 1].a;
    start[i] = start[i - 1] + len;
  }
  const int mid = start[e.src] - 1;
  std::vector<std::vector<int>> phi_fibers(e.src);
  for (int i = 1; i <= e.src; ++i)
    for (int u = start[i - 1]; u < start[i]; ++u) phi_fibers[i - 1].push_back(u);

  // Within source fiber i, the source shuffle says which vertical positions
  // belong to each cell (d, i); cell_labels[d][i] lists them in the vertical
  // order of the cell.
  std::vector<std::vector<std::vector<int>>> cell_labels(
      e.dst, std::vector<std::vector<int>>(e.src));
  for (int i = 1; i <= e.src; ++i) {
    const Shuffle& sh = e.src_shuffles[i - 1];
    int pos = 0;
    for (int d = 1; d <= e.dst; ++d)
      for (int k = 0; k < sh.type[d - 1]; ++k)
        cell_labels[d - 1][i - 1].push_back(start[i - 1] + sh.images[pos++] - 1);
  }

  // Each target fiber interleaves its cells per the target shuffle; inside a
  // cell, the r-th element in the horizontal order is the one whose vertical
  // rank maps to r.
  std::vector<std::vector<int>> f_fibers(e.dst);
  for (int d = 1; d <= e.dst; ++d) {
    const std::vector<int> word = shuffle_to_word(e.dst_shuffles[d - 1]);
    std::vector<int> taken(e.src, 0);
    for (int q = 0; q < static_cast<int>(word.size()); ++q) {
      const int i = word[q];
      const int r = ++taken[i - 1];
      const Permutation inv = e.entries[d - 1][i - 1].sigma.inverse();
      f_fibers[d - 1].push_back(cell_labels[d - 1][i - 1][inv(r) - 1]);
    }
  }
  return normalize(make_span(DoubleKind::Fas, NcMap(mid, e.src, std::move(phi_fibers)),
                             NcMap(mid, e.dst, std::move(f_fibers))));
}

}  // namespace qprop
