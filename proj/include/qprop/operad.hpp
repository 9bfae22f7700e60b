#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qprop/ncset.hpp"
#include "qprop/perm.hpp"

namespace qprop {

// A set operad, truncated at a maximal arity: a family of finite element
// sets P(n) with a unit in P(1), a substitution law gamma, and a right
// symmetric-group action on each P(n).  Elements are addressed by index;
// queries beyond the truncation arity throw.  Two structures are provided:
// the operad of orderings (P(n) = all permutations of n, substitution =
// block substitution) and the terminal operad (every P(n) a point).
class SetOperad {
 public:
  enum class Kind { Orderings, Terminal };

  SetOperad(Kind kind, int max_arity);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int max_arity() const { return max_arity_; }

  long long size(int n) const;  // |P(n)|
  long long unit() const;       // index of the unit in P(1)

  // Substitution: outer element a of arity parts.size(), parts[r] = (arity,
  // element index) for input slot r+1.  Returns the index of the composite,
  // whose arity is the sum of the part arities.
  long long gamma(long long a, const std::vector<std::pair<int, long long>>& parts) const;

  // The right action of a permutation of n on P(n).
  long long act(int n, long long a, const Permutation& chi) const;

  friend bool operator==(const SetOperad&, const SetOperad&) = default;

 private:
  void check_arity(int n) const;

  Kind kind_ = Kind::Terminal;
  int max_arity_ = 0;
  std::string name_;
};

SetOperad as_operad(int max_arity);
SetOperad com_operad(int max_arity);

// Verifies the operad laws on all element combinations of total arity at
// most the bound: the point at arity 0, both unit laws, substitution
// associativity, the two equivariance laws, and that act is a right action.
bool validate_operad_laws(const SetOperad& P, int total_arity_bound);

// A morphism of the twisted map category over an operad: a plain set map
// together with one operad element per target, whose arity is the fiber
// size.
struct FPMorphism {
  FinSetMap f;
  std::vector<long long> omega;  // omega[i-1] lives in P(|f^{-1}(i)|)

  friend bool operator==(const FPMorphism&, const FPMorphism&) = default;
};

FPMorphism make_fp(const SetOperad& P, FinSetMap f, std::vector<long long> omega);
void validate_fp(const SetOperad& P, const FPMorphism& m);
FPMorphism identity_fp(const SetOperad& P, int n);

// second after first.  The underlying maps compose; the twist over a target
// i substitutes the first factor's twists (fibers of `second` listed in
// increasing order) into the second factor's twist, then corrects by the
// shuffle that interleaves the sorted fiber blocks into the sorted composite
// fiber -- the substitution alone orders the composite fiber block by
// block, not increasingly.
FPMorphism compose_fp(const SetOperad& P, const FPMorphism& second, const FPMorphism& first);

// All morphisms n -> m over the operad (every underlying map, every twist).
std::vector<FPMorphism> all_fp_morphisms(const SetOperad& P, int n, int m);

// Translation between maps-with-ordered-fibers and twisted maps over the
// operad of orderings.  The twist of a fiber sends the rank of an element
// (in increasing order) to its position in the fiber sequence; this is the
// convention under which compose_fp matches the composition of ordered
// fibers.  The two are mutually inverse.
FPMorphism nc_to_fp(const SetOperad& P, const NcMap& f);
NcMap fp_to_nc(const SetOperad& P, const FPMorphism& m);

// A square in the double category with plain horizontal maps and twisted
// vertical maps:
//
//            f1
//        U ------> S
//   phi1 |         | phi
//        v    f    v
//        T ------> V
//
// The underlying square is a pullback of sets and the vertical twists are
// compatible: the twist of phi1 over t equals the twist of phi over f(t).
struct FpSquare {
  FinSetMap f1;     // top
  FPMorphism phi1;  // left
  FinSetMap f;      // bottom
  FPMorphism phi;   // right

  friend bool operator==(const FpSquare&, const FpSquare&) = default;
};

bool is_fp2_square(const SetOperad& P, const FpSquare& square);

// The pullback square over the shared target of a horizontal map f and a
// vertical twisted map phi; the middle set is enumerated fiberwise (for
// each source element of phi in order, its partners along f in increasing
// order) and the left twists are copied along the bottom map.
FpSquare pullback_fp2(const SetOperad& P, const FinSetMap& f, const FPMorphism& phi);

// A span with a twisted vertical leg and a plain horizontal leg, the
// morphisms of the quotient category of the double category above.
struct FpSpan {
  int src = 0;
  int dst = 0;
  int mid = 0;
  FPMorphism phi;  // mid -> src, twisted
  FinSetMap f;     // mid -> dst

  friend bool operator==(const FpSpan&, const FpSpan&) = default;
};

FpSpan make_fp_span(const SetOperad& P, int src, int dst, FPMorphism phi, FinSetMap f);
FpSpan identity_fp_span(const SetOperad& P, int n);

// Renames the middle set along a permutation; phi and f are precomposed
// with the inverse renaming and the twists are corrected for the new
// increasing fiber orders.
FpSpan relabel_fp_span(const SetOperad& P, const FpSpan& s, const Permutation& rho);

// Canonical representative of the middle-renaming orbit: the
// lexicographically least serialization over all renamings.  Guarded to
// middle sets of at most 8 elements.
FpSpan normalize_fp(const SetOperad& P, const FpSpan& s);

// second after first: pull the horizontal leg of `first` back against the
// vertical leg of `second`, compose the legs, normalize.
FpSpan compose_span_fp2(const SetOperad& P, const FpSpan& second, const FpSpan& first);

// All spans n -> m with middle set at most max_mid, in normal form.
std::vector<FpSpan> all_fp_spans(const SetOperad& P, int n, int m, int max_mid);

// An element of the free algebra on a finite set X = {1..points_size}: an
// operad element together with a tuple of points, stored as the canonical
// representative of its simultaneous-renaming orbit (the least pair of
// element index and tuple over all right translates).
struct FreeElement {
  int arity = 0;
  long long element = 0;
  std::vector<int> points;
  int points_size = 0;

  friend bool operator==(const FreeElement&, const FreeElement&) = default;
};

FreeElement make_free_element(const SetOperad& P, int arity, long long element,
                              std::vector<int> points, int points_size);

// Reads off the free-algebra element of a span out of the one-point object:
// the twist over the single target together with the tuple of horizontal
// images, canonicalized.  Spans equal up to middle renaming give the same
// element.
FreeElement span_to_free(const SetOperad& P, const FpSpan& s);

}  // namespace qprop
