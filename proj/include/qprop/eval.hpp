#pragma once

#include "qprop/bialg.hpp"
#include "qprop/doublecat.hpp"
#include "qprop/span.hpp"

namespace qprop {

// Covariant evaluation of a horizontal morphism: on a basis tensor, output
// factor j is the ordered product of the input factors along f's fiber of j;
// an empty fiber yields the unit.  Requires the algebra axioms.
LinMap eval_horiz(const NcMap& f, const BialgebraData& b);

// Contravariant evaluation of a vertical morphism: input factor j is
// comultiplied once less than its fiber size (counit for an empty fiber),
// and the k-th comultiplication copy is routed to the k-th element of the
// fiber.  Requires the coalgebra axioms.  The result maps power
// phi.target_size() to power phi.source_size().
LinMap eval_vert(const NcMap& phi, const BialgebraData& b);

// Evaluation of a span: eval_horiz of the horizontal leg after eval_vert of
// the vertical leg, computed without materializing the middle tensor power.
// Preconditions by kind: ordered legs on both sides need a bialgebra; a
// plain vertical leg additionally needs cocommutativity; a plain horizontal
// leg commutativity; plain legs on both sides need both.
LinMap eval_span(const Span& s, const BialgebraData& b);

// The exchange law on a square: evaluating vertical-after-horizontal along
// the bottom-right equals horizontal-after-vertical along the top-left.
bool mackey_check(const Bimorphism& bm, const BialgebraData& b);

// The terms of the k-fold comultiplication of basis vector a, as pairs of a
// digit tuple of length k and a rational coefficient (k = 0 gives the counit
// value on the empty tuple, k = 1 the vector itself).
std::vector<std::pair<std::vector<int>, Rational>> comult_terms(const BialgebraData& b,
                                                                int k, int a);

// The terms of the ordered product of the listed basis vectors, as pairs of
// a basis index and a coefficient; the empty product is the unit.
std::vector<std::pair<int, Rational>> product_terms(const BialgebraData& b,
                                                    const std::vector<int>& digits);

// The generalized power operation: comultiply n times, place copy k at
// tensor slot sigma(k), multiply the slots in increasing order.  Requires a
// bialgebra.
LinMap psi(int n, const Permutation& sigma, const BialgebraData& b);

// psi(n, id), computed by the recursion P(n) = mult . (P(n-1) x id) . comult.
LinMap psi_power(int n, const BialgebraData& b);

}  // namespace qprop
