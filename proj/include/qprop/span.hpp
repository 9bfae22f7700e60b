#pragma once

#include <utility>

#include "qprop/doublecat.hpp"

namespace qprop {

// A span  src <--phi-- mid --f--> dst  of the given kind. Producers in this
// library always return spans in normal form: the middle elements are labeled
// by the canonical key (see normalize), so two spans are isomorphic if and
// only if they are equal values. make_span performs no normalization and is
// the entry point for raw test data.
struct Span {
  DoubleKind kind = DoubleKind::Fas;
  int src = 0;
  int dst = 0;
  int mid = 0;
  NcMap phi;  // mid -> src (vertical)
  NcMap f;    // mid -> dst (horizontal)

  friend bool operator==(const Span&, const Span&) = default;
};

Span make_span(DoubleKind kind, const NcMap& phi, const NcMap& f);

// Canonical representative of the span's isomorphism class. Middle elements
// are relabeled in the order of the key
//   Fas, Fas2: (phi-target, rank inside the phi-fiber)
//   Fas1:      (phi-target, f-target, rank inside the f-fiber)
//   F:         (phi-target, f-target, original label)
// and plain-set legs are re-sorted increasingly afterwards.
Span normalize(const Span& raw);

// Relabels the middle object by h (new label of u is h(u)), preserving fiber
// sequences on ordered legs and re-sorting plain-set legs. Normalization is
// constant exactly on the orbits of this action.
Span relabel_mid(const Span& s, const Permutation& h);

Span identity_span(DoubleKind kind, int n);
Span compose_span(const Span& second, const Span& first);

// Embeds a single morphism as a span: i_star(f) = S <-id- S -f-> T for
// horizontal f, and i_costar(phi) = T <-phi- S -id-> S for vertical phi.
Span i_star(DoubleKind kind, const NcMap& f);
Span i_costar(DoubleKind kind, const NcMap& phi);

Span span_disjoint_union(const Span& a, const Span& b);

// The unique spans n -> 0 and 0 -> m; both have an empty middle object.
std::pair<Span, Span> zero_object_morphisms(DoubleKind kind, int n, int m);

// An endomorphism of the one-point object: n parallel strands folded with
// the permutation sigma.
struct EndoPair {
  int n = 0;
  Permutation sigma;
  friend bool operator==(const EndoPair&, const EndoPair&) = default;
};

EndoPair endo_compose(const EndoPair& a, const EndoPair& b);  // a after b
Span endo_to_span(const EndoPair& e);                         // a span 1 -> 1 with ordered legs
EndoPair endo_from_span(const Span& s);

// Every span of the kind from n to m whose middle has at most max_mid
// elements, each in normal form, without duplicates.
std::vector<Span> all_spans(DoubleKind kind, int n, int m, int max_mid);

}  // namespace qprop
