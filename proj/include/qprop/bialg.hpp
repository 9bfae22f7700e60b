#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qprop/linmap.hpp"

namespace qprop {

// Result of checking every (co)algebra and compatibility axiom on a
// structure; each flag is verified against the structure constants, never
// asserted.
struct AxiomReport {
  bool associative = false;
  bool unital = false;         // two-sided unit
  bool coassociative = false;
  bool counital = false;       // two-sided counit
  bool comult_multiplicative = false;  // comultiplication is an algebra map
  bool counit_multiplicative = false;  // counit is an algebra map
  bool comult_preserves_unit = false;
  bool counit_preserves_unit = false;
  bool commutative = false;
  bool cocommutative = false;
  bool antipode_present = false;
  bool antipode_valid = false;  // both antipode identities; false when absent

  bool algebra() const { return associative && unital; }
  bool coalgebra() const { return coassociative && counital; }
  bool bialgebra() const {
    return algebra() && coalgebra() && comult_multiplicative && counit_multiplicative &&
           comult_preserves_unit && counit_preserves_unit;
  }
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

// A finite-dimensional algebra-and-coalgebra over the rationals, given by
// structure constants, with an optional antipode.  The axiom report is
// computed once at construction.
struct BialgebraData {
  std::string name;
  int dim = 0;
  std::vector<Rational> unit;    // coordinates of the unit element
  std::vector<Rational> counit;  // value of the counit on each basis vector
  LinMap mult;                   // tensor square -> space
  LinMap comult;                 // space -> tensor square
  std::optional<LinMap> antipode;
  AxiomReport axioms;

  LinMap unit_map() const;    // power 0 -> power 1
  LinMap counit_map() const;  // power 1 -> power 0
};

AxiomReport check_axioms(const BialgebraData& b);

// Builds the structure from dense tensors and verifies the axioms.
// mult_tensor[a][b][c] is the coefficient of basis vector c in the product
// of a and b; comult_tensor[c][a][b] is the coefficient of the pair (a, b)
// in the comultiplication of c; antipode[a][b] is the coefficient of a in
// the antipode of b.
BialgebraData make_bialgebra(
    std::string name, int dim, std::vector<Rational> unit, std::vector<Rational> counit,
    const std::vector<std::vector<std::vector<Rational>>>& mult_tensor,
    const std::vector<std::vector<std::vector<Rational>>>& comult_tensor,
    const std::optional<std::vector<std::vector<Rational>>>& antipode);

// Named example structures.  Accepted names:
//   group_algebra(C2) / c2        group_algebra(C3) / c3
//   group_algebra(S3) / s3        dual_group_algebra(C2) / c2dual
//   dual_group_algebra(C3) / c3dual   dual_group_algebra(S3) / s3dual
//   sweedler4 / sweedler          nonbialg_counterexample / nonbialg
// (sweedler4 needs 2 to be invertible in the scalars, which holds here.)
BialgebraData builtin(const std::string& name);

// The canonical names of all builtins, in a fixed order.
std::vector<std::string> builtin_names();

// The group algebra of a permutation group given by its element list; the
// basis is the elements, products multiply them, the comultiplication is
// diagonal, and the antipode inverts.
BialgebraData group_algebra(std::string name, const std::vector<Permutation>& elements);

// The linear dual: basis of delta functions, pointwise product, convolution
// comultiplication.
BialgebraData dual_group_algebra(std::string name, const std::vector<Permutation>& elements);

}  // namespace qprop
