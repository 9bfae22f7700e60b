#pragma once

#include <string>
#include <vector>

#include "qprop/eval.hpp"
#include "qprop/ncset.hpp"

namespace qprop {

// One letter of a free-group word: a generator index (1-based) and an
// exponent +1 or -1.  Higher powers are stored letter by letter.
struct GroupLetter {
  int gen = 0;
  int exp = 1;
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
};

// A freely reduced word in the generators of a free group: no letter is
// adjacent to its own inverse.  The empty word is the identity.
struct GroupWord {
  std::vector<GroupLetter> letters;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

bool is_reduced(const std::vector<GroupLetter>& letters);

// Free reduction: cancel adjacent mutually inverse letters until none remain.
GroupWord reduce(std::vector<GroupLetter> letters);

GroupWord word_mul(const GroupWord& a, const GroupWord& b);
GroupWord word_inverse(const GroupWord& a);

// Substitutes images[i-1] for generator i (its inverse at exponent -1), then
// reduces.
GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images);

// Word syntax for the command line: whitespace-separated letters such as
// "x1^-1 x2 x1"; an integer exponent expands into repeated letters; "e" (or
// an empty string) is the empty word.
GroupWord parse_word(const std::string& text);
std::string format_word(const GroupWord& w);

// A homomorphism of finitely generated free groups, stored as the reduced
// images of the source generators.
struct GroupHom {
  int source_rank = 0;
  int target_rank = 0;
  std::vector<GroupWord> images;

  GroupHom() = default;
  GroupHom(int source_rank, int target_rank, std::vector<GroupWord> images);
  static GroupHom identity(int n);

  friend bool operator==(const GroupHom&, const GroupHom&) = default;
};

// second after first: substitute the images of `second` into each image word
// of `first`.
GroupHom compose_hom(const GroupHom& second, const GroupHom& first);

// Equality of homomorphisms; words are kept reduced, so this is equality of
// the stored normal forms.
bool hom_equal(const GroupHom& a, const GroupHom& b);

// Contravariant evaluation on a cocommutative Hopf structure: a homomorphism
// with source rank m and target rank n yields a linear map from the n-th to
// the m-th tensor power.  Input factor i is comultiplied into one copy per
// occurrence of generator i across the image words, the copies are routed to
// the occurrences in scan order (first word left to right, then the second,
// and so on), the antipode is applied at exponent -1, and each word
// multiplies its factors in word order.  Cocommutativity makes the routing
// order immaterial.
LinMap eval_hom_on_hopf(const GroupHom& h, const BialgebraData& H);

// The same computation without the cocommutativity and antipode-axiom
// checks (an antipode matrix must still be present), with an optional
// routing override: occurrence k of generator i receives comultiplication
// copy routing[i-1](k) instead of copy k.  On cocommutative inputs the
// routing does not matter; in general it does, which is why the checked
// version insists on cocommutativity.
LinMap eval_hom_unchecked(const GroupHom& h, const BialgebraData& H,
                          const std::vector<Permutation>& routing = {});

// The image of the adjacent transposition (i, i+1) under the symmetric-group
// action on a free group of rank k: generator i inverts, each neighbour of
// generator i picks up a left factor x_i (so x_{i-1} maps to x_{i-1}x_i and
// x_{i+1} to x_ix_{i+1}); all other generators are fixed.
GroupHom xi_generator(int k, int i);

// The action homomorphism from the symmetric group on k+1 letters to the
// automorphisms of the free group of rank k: factor the permutation into
// adjacent transpositions (bubble sort, for determinism) and compose the
// generator images.  Well-definedness rests on the Coxeter relations, which
// the test suite verifies rather than assumes.
GroupHom xi(int k, const Permutation& perm);

// An element of the group generated by symbols <x,y> for x, y in a base set
// {1..base}, subject to <x,y><y,z> = <x,z>.  Normal form: a reduced word in
// the generators g_x = <x,1> for x >= 2 (g_1 is trivial), so equality is
// word comparison.
struct PairGroupElement {
  int base = 0;  // size of the underlying set; the basepoint is element 1
  std::vector<GroupLetter> word;  // reduced, generator indices in 2..base

  PairGroupElement() = default;
  PairGroupElement(int base, std::vector<GroupLetter> word);
  static PairGroupElement identity(int base);

  friend bool operator==(const PairGroupElement&, const PairGroupElement&) = default;
};

// The symbol <x,y> in normal form, i.e. g_x * g_y^{-1}.
PairGroupElement pair_gen(int base, int x, int y);

PairGroupElement pair_group_mul(const PairGroupElement& a, const PairGroupElement& b);
PairGroupElement pair_group_inverse(const PairGroupElement& a);

// Functoriality in the base set: every symbol <x,y> maps to
// <alpha(x), alpha(y)>; realized on normal forms by sending g_x to the
// normal form of <alpha(x), alpha(1)>.
PairGroupElement pair_group_map(const FinSetMap& alpha, const PairGroupElement& e);

}  // namespace qprop
