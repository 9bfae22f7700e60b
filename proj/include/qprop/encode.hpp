#pragma once

#include <vector>

#include "qprop/span.hpp"

namespace qprop {

// A matrix of natural numbers.  Spans of plain sets from n to m are, up to
// equivalence, exactly the m x n matrices over the naturals: the (i, j)
// entry counts the middle elements sent to j by the vertical leg and to i by
// the horizontal one.  Composition of spans becomes the matrix product.
struct NatMatrix {
  int rows = 0;                                 // size of the span's target
  int cols = 0;                                 // size of the span's source
  std::vector<std::vector<long long>> entries;  // entries[i][j] >= 0

  friend bool operator==(const NatMatrix&, const NatMatrix&) = default;
};

// Throws std::invalid_argument unless the shape is rows x cols with all
// entries nonnegative.
void validate_matrix(const NatMatrix& m);

NatMatrix matrix_multiply(const NatMatrix& a, const NatMatrix& b);  // a * b

NatMatrix qf_to_matrix(const Span& s);    // requires plain legs on both sides
Span qf_from_matrix(const NatMatrix& m);  // the normal-form span of the matrix

// A tuple of words over the alphabet {x_1 .. x_m}, one word per source
// object.  Spans with an ordered vertical leg and a plain horizontal leg
// (morphisms of free commutative monoids on noncommutative generators) are
// exactly such tuples: the word of source object i lists the horizontal
// images along the ordered fiber of i.
struct WordTuple {
  int m = 0;                              // alphabet size, the span's target
  std::vector<std::vector<int>> words;    // words[i] uses letters 1..m

  friend bool operator==(const WordTuple&, const WordTuple&) = default;
};

void validate_words(const WordTuple& w);

WordTuple mon_words_of_span(const Span& s);
Span mon_span_of_words(const WordTuple& w);

// A shuffle: a permutation of 1..(a_1 + ... + a_m) that is increasing on
// each consecutive source block of sizes (a_1, ..., a_m).  A word of
// bidegree (a_1, ..., a_m) determines one by listing, letter by letter, the
// positions where that letter occurs.
struct Shuffle {
  std::vector<int> type;    // block sizes (a_1, ..., a_m)
  std::vector<int> images;  // one-line permutation of the total size

  friend bool operator==(const Shuffle&, const Shuffle&) = default;
};

void validate_shuffle(const Shuffle& sh);

Shuffle word_to_shuffle(const std::vector<int>& word, int m);
std::vector<int> shuffle_to_word(const Shuffle& sh);

// Full encoding of a span with two ordered legs.  Cell (d, s) records how
// many middle elements the legs send to source object s and target object d,
// together with the permutation comparing the two fiber orders on that cell.
// The two shuffle families record how the cells interleave inside each
// source fiber and each target fiber; with them the span can be rebuilt
// exactly.
struct QfasEntry {
  int a = 0;          // number of middle elements in the cell
  Permutation sigma;  // of degree a; position in the horizontal fiber order
                      // of the p-th element in the vertical fiber order

  friend bool operator==(const QfasEntry&, const QfasEntry&) = default;
};

struct QfasEncoding {
  int src = 0;
  int dst = 0;
  std::vector<std::vector<QfasEntry>> entries;  // entries[d][s], d over dst
  std::vector<Shuffle> src_shuffles;            // per source object, type over dst
  std::vector<Shuffle> dst_shuffles;            // per target object, type over src

  friend bool operator==(const QfasEncoding&, const QfasEncoding&) = default;
};

void validate_qfas(const QfasEncoding& e);

QfasEncoding qfas_encode(const Span& s);  // requires ordered legs on both sides
Span qfas_decode(const QfasEncoding& e);

}  // namespace qprop
