#pragma once

#include <string>

#include "qprop/ncset.hpp"

namespace qprop {

// Which of the four square categories a value belongs to. Horizontal legs
// carry significant fiber orderings in Fas and Fas1, vertical legs in Fas and
// Fas2; every other leg is a plain set map stored with increasing fibers.
enum class DoubleKind { F, Fas, Fas1, Fas2 };

bool horizontal_ordered(DoubleKind k);
bool vertical_ordered(DoubleKind k);
std::string kind_name(DoubleKind k);
DoubleKind kind_from_name(const std::string& name);

// A square
//
//            f1
//        U ------> S
//        |         |
//   phi1 |         | phi
//        v         v
//        T ------> V
//            f
//
// The underlying maps must commute and form a pullback of sets, and on legs
// with significant orderings the induced fiber maps must preserve order:
// applying f1 along a phi1-fiber must reproduce the matching phi-fiber, and
// applying phi1 along an f1-fiber must reproduce the matching f-fiber.
struct Bimorphism {
  DoubleKind kind = DoubleKind::Fas;
  NcMap f1;    // U -> S
  NcMap phi1;  // U -> T
  NcMap f;     // T -> V
  NcMap phi;   // S -> V
};

// The canonical square over bottom f and right phi. The middle object is the
// set of pairs (t, s) with |f|(t) = |phi|(s), labeled in the order: s = 1..S
// outermost, then t along f's ordered fiber of |phi|(s).
Bimorphism pullback(DoubleKind kind, const NcMap& f, const NcMap& phi);

bool is_bimorphism(const Bimorphism& b);

// True when the bottom and right legs are both elementary surjections.
bool is_elementary_bimorphism(const Bimorphism& b);

}  // namespace qprop
