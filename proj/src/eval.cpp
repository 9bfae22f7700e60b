#include "qprop/eval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace qprop {

namespace {

using SparseVec = std::map<Index, Rational>;
using Term = std::pair<std::vector<int>, Rational>;  // digit tuple and coefficient

void require_algebra(const BialgebraData& b, const char* what) {
  if (!b.axioms.algebra())
    throw std::invalid_argument(std::string(what) + ": '" + b.name +
                                "' is not an associative unital algebra");
}

void require_coalgebra(const BialgebraData& b, const char* what) {
  if (!b.axioms.coalgebra())
    throw std::invalid_argument(std::string(what) + ": '" + b.name +
                                "' is not a coassociative counital coalgebra");
}

void require_bialgebra(const BialgebraData& b, const char* what) {
  if (!b.axioms.bialgebra())
    throw std::invalid_argument(std::string(what) + ": '" + b.name + "' is not a bialgebra");
}

// Structure constants unpacked into per-basis lists for fast inner loops.
struct Tables {
  int d = 0;
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> prod;  // prod[a][b]
  std::vector<std::pair<int, Rational>> unit;
  std::vector<Rational> counit;
  // delta[k][a]: the terms of the k-fold comultiplication of basis vector a
  std::vector<std::vector<std::vector<Term>>> delta;

  explicit Tables(const BialgebraData& b, int max_fiber) : d(b.dim), counit(b.counit) {
    prod.assign(d, std::vector<std::vector<std::pair<int, Rational>>>(d));
    for (int a = 0; a < d; ++a)
      for (int c = 0; c < d; ++c)
        for (const auto& [row, v] : b.mult.column(static_cast<Index>(a) * d + c))
          prod[a][c].emplace_back(static_cast<int>(row), v);
    for (int a = 0; a < d; ++a)
      if (b.unit[a] != 0) unit.emplace_back(a, b.unit[a]);

    delta.resize(std::max(max_fiber, 1) + 1);
    delta[0].resize(d);
    for (int a = 0; a < d; ++a)
      if (b.counit[a] != 0) delta[0][a].push_back({{}, b.counit[a]});
    delta[1].resize(d);
    for (int a = 0; a < d; ++a) delta[1][a].push_back({{a}, 1});
    for (int k = 2; k < static_cast<int>(delta.size()); ++k) {
      delta[k].resize(d);
      // comultiply the leading copy once more
      for (int a = 0; a < d; ++a)
        for (const auto& [tuple, v] : delta[k - 1][a])
          for (const auto& [row, w] : b.comult.column(tuple.front())) {
            std::vector<int> digits{static_cast<int>(row) / d, static_cast<int>(row) % d};
            digits.insert(digits.end(), tuple.begin() + 1, tuple.end());
            delta[k][a].push_back({std::move(digits), v * w});
          }
    }
  }
};

int max_fiber_size(const NcMap& m) {
  int out = 0;
  for (int j = 1; j <= m.target_size(); ++j)
    out = std::max(out, static_cast<int>(m.fiber(j).size()));
  return out;
}

// Ordered product of the digits selected by positions, as a sparse vector
// over single basis indices; the empty product is the unit.
void multiply_positions(const Tables& t, const std::vector<int>& digits,
                        const std::vector<int>& positions, std::vector<std::pair<int, Rational>>& out) {
  out.clear();
  if (positions.empty()) {
    out = t.unit;
    return;
  }
  out.emplace_back(digits[positions[0] - 1], 1);
  std::vector<std::pair<int, Rational>> next;
  for (std::size_t k = 1; k < positions.size(); ++k) {
    next.clear();
    const int right = digits[positions[k] - 1];
    for (const auto& [a, v] : out)
      for (const auto& [c, w] : t.prod[a][right]) next.emplace_back(c, v * w);
    std::swap(out, next);
  }
}

// All Sweedler expansions of the input digits along the fibers of phi,
// routed so that copy c of input factor j lands at position fiber(j)[c].
std::vector<Term> vert_terms(const Tables& t, const NcMap& phi, const std::vector<int>& digits) {
  std::vector<Term> state{{std::vector<int>(phi.source_size(), 0), 1}};
  for (int j = 1; j <= phi.target_size(); ++j) {
    const auto& fib = phi.fiber(j);
    const auto& expansions = t.delta[fib.size()][digits[j - 1]];
    std::vector<Term> next;
    next.reserve(state.size() * expansions.size());
    for (const auto& [partial, v] : state)
      for (const auto& [copies, w] : expansions) {
        Term q{partial, v * w};
        for (std::size_t c = 0; c < fib.size(); ++c) q.first[fib[c] - 1] = copies[c];
        next.push_back(std::move(q));
      }
    state = std::move(next);
    if (state.empty()) break;
  }
  return state;
}

// Products along the fibers of f applied to a fully expanded digit tuple.
void horiz_accumulate(const Tables& t, const NcMap& f, const std::vector<int>& digits,
                      const Rational& coeff, SparseVec& out) {
  std::vector<std::pair<int, Rational>> slot;
  // combined index accumulated slot by slot, factor 1 most significant
  std::vector<std::pair<Index, Rational>> partial{{0, coeff}}, grown;
  for (int j = 1; j <= f.target_size(); ++j) {
    multiply_positions(t, digits, f.fiber(j), slot);
    if (slot.empty()) return;
    grown.clear();
    grown.reserve(partial.size() * slot.size());
    for (const auto& [idx, v] : partial)
      for (const auto& [a, w] : slot) grown.emplace_back(idx * t.d + a, v * w);
    std::swap(partial, grown);
  }
  for (const auto& [idx, v] : partial) {
    auto it = out.find(idx);
    if (it == out.end())
      out.emplace(idx, v);
    else {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
}

// The span composite on one basis tensor: comultiply along phi, then
// multiply along f.  When the algebra is commutative the slot products are
// folded in eagerly, which keeps the intermediate state small; otherwise
// the full Sweedler expansion is enumerated (fine for the structures with
// few comultiplication terms).
SparseVec span_basis(const Tables& t, const BialgebraData& b, const NcMap& phi, const NcMap& f,
                     const std::vector<int>& digits) {
  SparseVec out;
  if (!b.axioms.commutative) {
    for (const auto& [tuple, v] : vert_terms(t, phi, digits))
      horiz_accumulate(t, f, tuple, v, out);
    return out;
  }

  const int slots = f.target_size();
  const int none = t.d;  // sentinel: no factor absorbed into the slot yet
  std::map<std::vector<int>, Rational> state{{std::vector<int>(slots, none), Rational(1)}};
  // One comultiplication step at a time, each copy folded into its slot right
  // away, so the state never sees a full Sweedler expansion of a fiber.
  using Pending = std::map<std::pair<std::vector<int>, int>, Rational>;
  const auto absorb = [&t](Pending& dest, const std::vector<int>& svec, int slot, int digit,
                           int rest, const Rational& coeff) {
    if (svec[slot] == t.d) {
      auto key = std::make_pair(svec, rest);
      key.first[slot] = digit;
      dest[std::move(key)] += coeff;
    } else {
      for (const auto& [p, pv] : t.prod[svec[slot]][digit]) {
        auto key = std::make_pair(svec, rest);
        key.first[slot] = p;
        dest[std::move(key)] += coeff * pv;
      }
    }
  };
  for (int j = 1; j <= phi.target_size() && !state.empty(); ++j) {
    const auto& fib = phi.fiber(j);
    const int digit = digits[j - 1];
    if (fib.empty()) {
      const Rational eps = t.counit[digit];
      if (eps == 0) {
        state.clear();
        break;
      }
      if (eps != 1)
        for (auto& [svec, v] : state) v *= eps;
      continue;
    }
    // the second key component is the not-yet-comultiplied trailing copy
    Pending pending;
    for (const auto& [svec, v] : state) pending[{svec, digit}] += v;
    for (std::size_t c = 0; c < fib.size(); ++c) {
      const int slot = f.apply(fib[c]) - 1;
      Pending next;
      for (const auto& [key, v] : pending) {
        if (v == 0) continue;
        const auto& [svec, rest] = key;
        if (c + 1 < fib.size()) {
          for (const auto& [pair, w] : b.comult.column(rest))
            absorb(next, svec, slot, static_cast<int>(pair) / t.d, static_cast<int>(pair) % t.d,
                   v * w);
        } else {
          absorb(next, svec, slot, rest, -1, v);
        }
      }
      pending = std::move(next);
    }
    state.clear();
    for (const auto& [key, v] : pending)
      if (v != 0) state.emplace(key.first, v);
  }

  // untouched slots hold the empty product, i.e. the unit
  for (const auto& [svec, v] : state) {
    std::vector<std::pair<Index, Rational>> partial{{0, v}}, grown;
    for (int s = 0; s < slots; ++s) {
      grown.clear();
      if (svec[s] == none) {
        for (const auto& [idx, pv] : partial)
          for (const auto& [a, uv] : t.unit) grown.emplace_back(idx * t.d + a, pv * uv);
      } else {
        for (const auto& [idx, pv] : partial) grown.emplace_back(idx * t.d + svec[s], pv);
      }
      std::swap(partial, grown);
    }
    for (const auto& [idx, pv] : partial) {
      auto it = out.find(idx);
      if (it == out.end())
        out.emplace(idx, pv);
      else {
        it->second += pv;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

LinMap eval_horiz(const NcMap& f, const BialgebraData& b) {
  require_algebra(b, "eval_horiz");
  const Tables t(b, 1);
  LinMap out(b.dim, f.source_size(), f.target_size());
  SparseVec col;
  for (Index c = 0; c < out.dom_size(); ++c) {
    col.clear();
    horiz_accumulate(t, f, index_to_digits(c, b.dim, f.source_size()), 1, col);
    for (const auto& [row, v] : col) out.add(row, c, v);
  }
  return out;
}

LinMap eval_vert(const NcMap& phi, const BialgebraData& b) {
  require_coalgebra(b, "eval_vert");
  const Tables t(b, max_fiber_size(phi));
  LinMap out(b.dim, phi.target_size(), phi.source_size());
  for (Index c = 0; c < out.dom_size(); ++c) {
    const auto digits = index_to_digits(c, b.dim, phi.target_size());
    for (const auto& [tuple, v] : vert_terms(t, phi, digits))
      out.add(digits_to_index(tuple, b.dim), c, v);
  }
  return out;
}

LinMap eval_span(const Span& s, const BialgebraData& b) {
  switch (s.kind) {
    case DoubleKind::Fas:
      require_bialgebra(b, "eval_span");
      break;
    case DoubleKind::Fas1:
      require_bialgebra(b, "eval_span");
      if (!b.axioms.cocommutative)
        throw std::invalid_argument("eval_span: a span with a plain vertical leg needs '" +
                                    b.name + "' to be cocommutative");
      break;
    case DoubleKind::Fas2:
      require_bialgebra(b, "eval_span");
      if (!b.axioms.commutative)
        throw std::invalid_argument("eval_span: a span with a plain horizontal leg needs '" +
                                    b.name + "' to be commutative");
      break;
    case DoubleKind::F:
      require_bialgebra(b, "eval_span");
      if (!b.axioms.commutative || !b.axioms.cocommutative)
        throw std::invalid_argument("eval_span: a span with plain legs needs '" + b.name +
                                    "' to be commutative and cocommutative");
      break;
  }
  const Tables t(b, b.axioms.commutative ? 1 : max_fiber_size(s.phi));
  LinMap out(b.dim, s.src, s.dst);
  for (Index c = 0; c < out.dom_size(); ++c) {
    const auto digits = index_to_digits(c, b.dim, s.src);
    for (const auto& [row, v] : span_basis(t, b, s.phi, s.f, digits)) out.add(row, c, v);
  }
  return out;
}

bool mackey_check(const Bimorphism& bm, const BialgebraData& b) {
  require_algebra(b, "mackey_check");
  require_coalgebra(b, "mackey_check");
  const Tables t(b, std::max({max_fiber_size(bm.phi), max_fiber_size(bm.phi1), 1}));
  const int T = bm.f.source_size();
  SparseVec lhs;
  for (Index c = 0; c < power_size(b.dim, T); ++c) {
    const auto digits = index_to_digits(c, b.dim, T);
    // bottom-right path: multiply along f, then comultiply along phi
    lhs.clear();
    SparseVec bottom;
    horiz_accumulate(t, bm.f, digits, 1, bottom);
    for (const auto& [idx, v] : bottom) {
      const auto vdig = index_to_digits(idx, b.dim, bm.f.target_size());
      for (const auto& [tuple, w] : vert_terms(t, bm.phi, vdig)) {
        const Index row = digits_to_index(tuple, b.dim);
        auto it = lhs.find(row);
        if (it == lhs.end())
          lhs.emplace(row, v * w);
        else {
          it->second += v * w;
          if (it->second == 0) lhs.erase(it);
        }
      }
    }
    // top-left path: comultiply along phi1, then multiply along f1
    const SparseVec rhs = span_basis(t, b, bm.phi1, bm.f1, digits);
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<std::pair<std::vector<int>, Rational>> comult_terms(const BialgebraData& b, int k,
                                                                int a) {
  if (k < 0) throw std::invalid_argument("comult_terms: negative count");
  if (a < 0 || a >= b.dim) throw std::invalid_argument("comult_terms: basis index out of range");
  require_coalgebra(b, "comult_terms");
  const Tables t(b, k);
  // merge coefficients of repeated tuples
  std::map<std::vector<int>, Rational> merged;
  for (const auto& [tuple, v] : t.delta[k][a]) merged[tuple] += v;
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (const auto& [tuple, v] : merged)
    if (v != 0) out.emplace_back(tuple, v);
  return out;
}

std::vector<std::pair<int, Rational>> product_terms(const BialgebraData& b,
                                                    const std::vector<int>& digits) {
  require_algebra(b, "product_terms");
  for (int a : digits)
    if (a < 0 || a >= b.dim) throw std::invalid_argument("product_terms: basis index out of range");
  const Tables t(b, 1);
  std::vector<int> positions(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) positions[i] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, Rational>> out;
  multiply_positions(t, digits, positions, out);
  // merge coefficients of repeated basis indices
  std::map<int, Rational> merged;
  for (const auto& [idx, v] : out) merged[idx] += v;
  out.clear();
  for (const auto& [idx, v] : merged)
    if (v != 0) out.emplace_back(idx, v);
  return out;
}

LinMap psi(int n, const Permutation& sigma, const BialgebraData& b) {
  if (sigma.degree() != n) throw std::invalid_argument("psi: permutation degree must equal n");
  require_bialgebra(b, "psi");
  // copy k is placed at slot sigma(k), then the slots multiply in order
  const NcMap fold_sigma = perm_to_fold(sigma);
  const NcMap fold_id = perm_to_fold(Permutation::identity(n));
  const Tables t(b, b.axioms.commutative ? 1 : n);
  LinMap out(b.dim, 1, 1);
  for (Index c = 0; c < out.dom_size(); ++c) {
    for (const auto& [row, v] : span_basis(t, b, fold_sigma, fold_id, {static_cast<int>(c)}))
      out.add(row, c, v);
  }
  return out;
}

LinMap psi_power(int n, const BialgebraData& b) {
  require_bialgebra(b, "psi_power");
  if (n < 0) throw std::invalid_argument("psi_power: negative power");
  const int d = b.dim;
  if (n == 0) return compose(b.unit_map(), b.counit_map());
  LinMap out = LinMap::identity(d, 1);
  for (int k = 2; k <= n; ++k) {
    LinMap next(d, 1, 1);
    for (Index c = 0; c < static_cast<Index>(d); ++c)
      for (const auto& [pair, v] : b.comult.column(c)) {
        const Index left = pair / d, right = pair % d;
        for (const auto& [mid, w] : out.column(left))
          for (const auto& [row, u] : b.mult.column(mid * d + right)) next.add(row, c, v * w * u);
      }
    out = next;
  }
  return out;
}

}  // namespace qprop
