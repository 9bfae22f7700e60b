#include "qprop/bialg.hpp"

#include <stdexcept>

namespace qprop {

namespace {

const Permutation kSwap({2, 1});

LinMap vector_as_map(const std::vector<Rational>& v, int dim) {
  LinMap out(dim, 0, 1);
  for (int c = 0; c < dim; ++c) out.add(static_cast<Index>(c), 0, v[c]);
  return out;
}

LinMap covector_as_map(const std::vector<Rational>& v, int dim) {
  LinMap out(dim, 1, 0);
  for (int c = 0; c < dim; ++c) out.add(0, static_cast<Index>(c), v[c]);
  return out;
}

int find_element(const std::vector<Permutation>& elements, const Permutation& p) {
  for (std::size_t k = 0; k < elements.size(); ++k)
    if (elements[k] == p) return static_cast<int>(k);
  throw std::invalid_argument("group element list is not closed under the operations");
}

using Dense3 = std::vector<std::vector<std::vector<Rational>>>;

Dense3 zero_tensor(int d) {
  return Dense3(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, 0)));
}

}  // namespace

LinMap BialgebraData::unit_map() const { return vector_as_map(unit, dim); }

LinMap BialgebraData::counit_map() const { return covector_as_map(counit, dim); }

AxiomReport check_axioms(const BialgebraData& b) {
  const int d = b.dim;
  const LinMap id1 = LinMap::identity(d, 1);
  const LinMap id0 = LinMap::identity(d, 0);
  const LinMap eta = b.unit_map();
  const LinMap eps = b.counit_map();
  const LinMap swap2 = permute_tensor(kSwap, d);
  // exchanges the two middle factors of a fourfold tensor
  const LinMap mid_swap = permute_tensor(Permutation({1, 3, 2, 4}), d);

  AxiomReport r;
  r.associative = compose(b.mult, tensor(b.mult, id1)) == compose(b.mult, tensor(id1, b.mult));
  r.unital = compose(b.mult, tensor(eta, id1)) == id1 &&
             compose(b.mult, tensor(id1, eta)) == id1;
  r.coassociative =
      compose(tensor(b.comult, id1), b.comult) == compose(tensor(id1, b.comult), b.comult);
  r.counital = compose(tensor(eps, id1), b.comult) == id1 &&
               compose(tensor(id1, eps), b.comult) == id1;
  r.comult_multiplicative =
      compose(b.comult, b.mult) ==
      compose(tensor(b.mult, b.mult), compose(mid_swap, tensor(b.comult, b.comult)));
  r.counit_multiplicative = compose(eps, b.mult) == tensor(eps, eps);
  r.comult_preserves_unit = compose(b.comult, eta) == tensor(eta, eta);
  r.counit_preserves_unit = compose(eps, eta) == id0;
  r.commutative = compose(b.mult, swap2) == b.mult;
  r.cocommutative = compose(swap2, b.comult) == b.comult;
  r.antipode_present = b.antipode.has_value();
  if (b.antipode) {
    const LinMap target = compose(eta, eps);
    r.antipode_valid =
        compose(b.mult, compose(tensor(*b.antipode, id1), b.comult)) == target &&
        compose(b.mult, compose(tensor(id1, *b.antipode), b.comult)) == target;
  }
  return r;
}

BialgebraData make_bialgebra(std::string name, int dim, std::vector<Rational> unit,
                             std::vector<Rational> counit, const Dense3& mult_tensor,
                             const Dense3& comult_tensor,
                             const std::optional<std::vector<std::vector<Rational>>>& antipode) {
  if (dim < 0) throw std::invalid_argument("bialgebra: negative dimension");
  const auto check3 = [dim](const Dense3& t, const char* what) {
    if (static_cast<int>(t.size()) != dim)
      throw std::invalid_argument(std::string(what) + ": wrong tensor shape");
    for (const auto& plane : t) {
      if (static_cast<int>(plane.size()) != dim)
        throw std::invalid_argument(std::string(what) + ": wrong tensor shape");
      for (const auto& row : plane)
        if (static_cast<int>(row.size()) != dim)
          throw std::invalid_argument(std::string(what) + ": wrong tensor shape");
    }
  };
  if (static_cast<int>(unit.size()) != dim || static_cast<int>(counit.size()) != dim)
    throw std::invalid_argument("bialgebra: unit or counit has the wrong length");
  check3(mult_tensor, "mult");
  check3(comult_tensor, "comult");

  BialgebraData b;
  b.name = std::move(name);
  b.dim = dim;
  b.unit = std::move(unit);
  b.counit = std::move(counit);
  b.mult = LinMap(dim, 2, 1);
  for (int a = 0; a < dim; ++a)
    for (int c = 0; c < dim; ++c)
      for (int e = 0; e < dim; ++e)
        b.mult.add(e, static_cast<Index>(a) * dim + c, mult_tensor[a][c][e]);
  b.comult = LinMap(dim, 1, 2);
  for (int c = 0; c < dim; ++c)
    for (int a = 0; a < dim; ++a)
      for (int e = 0; e < dim; ++e)
        b.comult.add(static_cast<Index>(a) * dim + e, c, comult_tensor[c][a][e]);
  if (antipode) {
    if (static_cast<int>(antipode->size()) != dim)
      throw std::invalid_argument("antipode: wrong matrix shape");
    LinMap s(dim, 1, 1);
    for (int row = 0; row < dim; ++row) {
      if (static_cast<int>((*antipode)[row].size()) != dim)
        throw std::invalid_argument("antipode: wrong matrix shape");
      for (int col = 0; col < dim; ++col) s.add(row, col, (*antipode)[row][col]);
    }
    b.antipode = std::move(s);
  }
  b.axioms = check_axioms(b);
  return b;
}

BialgebraData group_algebra(std::string name, const std::vector<Permutation>& elements) {
  const int d = static_cast<int>(elements.size());
  Dense3 mult = zero_tensor(d);
  Dense3 comult = zero_tensor(d);
  std::vector<std::vector<Rational>> antipode(d, std::vector<Rational>(d, 0));
  std::vector<Rational> unit(d, 0);
  std::vector<Rational> counit(d, 1);
  unit[find_element(elements, Permutation::identity(elements.front().degree()))] = 1;
  for (int a = 0; a < d; ++a) {
    for (int c = 0; c < d; ++c)
      mult[a][c][find_element(elements, elements[a].compose(elements[c]))] = 1;
    comult[a][a][a] = 1;
    antipode[find_element(elements, elements[a].inverse())][a] = 1;
  }
  return make_bialgebra(std::move(name), d, std::move(unit), std::move(counit), mult, comult,
                        antipode);
}

BialgebraData dual_group_algebra(std::string name, const std::vector<Permutation>& elements) {
  const int d = static_cast<int>(elements.size());
  Dense3 mult = zero_tensor(d);
  Dense3 comult = zero_tensor(d);
  std::vector<std::vector<Rational>> antipode(d, std::vector<Rational>(d, 0));
  std::vector<Rational> unit(d, 1);
  std::vector<Rational> counit(d, 0);
  counit[find_element(elements, Permutation::identity(elements.front().degree()))] = 1;
  for (int a = 0; a < d; ++a) {
    mult[a][a][a] = 1;
    for (int c = 0; c < d; ++c)
      comult[find_element(elements, elements[a].compose(elements[c]))][a][c] = 1;
    antipode[find_element(elements, elements[a].inverse())][a] = 1;
  }
  return make_bialgebra(std::move(name), d, std::move(unit), std::move(counit), mult, comult,
                        antipode);
}

namespace {

std::vector<Permutation> cyclic2() {
  return {Permutation::identity(2), Permutation({2, 1})};
}

std::vector<Permutation> cyclic3() {
  return {Permutation::identity(3), Permutation({2, 3, 1}), Permutation({3, 1, 2})};
}

std::vector<Permutation> symmetric3() {
  return {Permutation({1, 2, 3}), Permutation({2, 1, 3}), Permutation({3, 2, 1}),
          Permutation({1, 3, 2}), Permutation({2, 3, 1}), Permutation({3, 1, 2})};
}

// Four-dimensional structure on basis 1, g, x, gx with g*g = 1, x*x = 0,
// x*g = -g*x; it is a bialgebra with antipode but neither commutative nor
// cocommutative.
BialgebraData sweedler4() {
  const int d = 4;
  const int one = 0, g = 1, x = 2, gx = 3;
  Dense3 mult = zero_tensor(d);
  const auto set = [&](int a, int c, int result, int sign) { mult[a][c][result] = sign; };
  for (int a = 0; a < d; ++a) {
    mult[one][a][a] = 1;
    if (a != one) mult[a][one][a] = 1;
  }
  set(g, g, one, 1);
  set(g, x, gx, 1);
  set(x, g, gx, -1);
  set(g, gx, x, 1);
  set(gx, g, x, -1);
  // x*x, x*gx, gx*x and gx*gx all vanish
  Dense3 comult = zero_tensor(d);
  comult[one][one][one] = 1;
  comult[g][g][g] = 1;
  comult[x][x][one] = 1;
  comult[x][g][x] = 1;
  comult[gx][gx][g] = 1;
  comult[gx][one][gx] = 1;
  std::vector<std::vector<Rational>> antipode(d, std::vector<Rational>(d, 0));
  antipode[one][one] = 1;
  antipode[g][g] = 1;
  antipode[gx][x] = -1;
  antipode[x][gx] = 1;
  return make_bialgebra("sweedler4", d, {1, 0, 0, 0}, {1, 1, 0, 0}, mult, comult, antipode);
}

// Two-dimensional structure on basis 1, x with x*x = 0 and x comultiplied
// diagonally but with counit 1: a valid algebra and coalgebra whose counit
// is not multiplicative, so it is not a bialgebra.
BialgebraData nonbialg_counterexample() {
  const int d = 2;
  Dense3 mult = zero_tensor(d);
  mult[0][0][0] = 1;
  mult[0][1][1] = 1;
  mult[1][0][1] = 1;
  Dense3 comult = zero_tensor(d);
  comult[0][0][0] = 1;
  comult[1][1][1] = 1;
  return make_bialgebra("nonbialg_counterexample", d, {1, 0}, {1, 1}, mult, comult,
                        std::nullopt);
}

}  // namespace

BialgebraData builtin(const std::string& name) {
  if (name == "group_algebra(C2)" || name == "c2") return group_algebra("group_algebra(C2)", cyclic2());
  if (name == "group_algebra(C3)" || name == "c3") return group_algebra("group_algebra(C3)", cyclic3());
  if (name == "group_algebra(S3)" || name == "s3") return group_algebra("group_algebra(S3)", symmetric3());
  if (name == "dual_group_algebra(C2)" || name == "c2dual")
    return dual_group_algebra("dual_group_algebra(C2)", cyclic2());
  if (name == "dual_group_algebra(C3)" || name == "c3dual")
    return dual_group_algebra("dual_group_algebra(C3)", cyclic3());
  if (name == "dual_group_algebra(S3)" || name == "s3dual")
    return dual_group_algebra("dual_group_algebra(S3)", symmetric3());
  if (name == "sweedler4" || name == "sweedler") return sweedler4();
  if (name == "nonbialg_counterexample" || name == "nonbialg") return nonbialg_counterexample();
  throw std::invalid_argument("unknown builtin structure: " + name);
}

std::vector<std::string> builtin_names() {
  return {"group_algebra(C2)",      "group_algebra(C3)",      "group_algebra(S3)",
          "dual_group_algebra(C2)", "dual_group_algebra(C3)", "dual_group_algebra(S3)",
          "sweedler4",              "nonbialg_counterexample"};
}

}  // namespace qprop
