#include "qprop/operad.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace qprop {

namespace {

long long factorial(int n) {
  long long out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// The shuffle interleaving consecutive sorted blocks into one sorted run:
// rank v of the union maps to the concatenation position of the v-th
// smallest element.
Permutation interleave_shuffle(const std::vector<std::vector<int>>& blocks) {
  std::vector<std::pair<int, int>> order;  // (element, concatenation position)
  int pos = 0;
  for (const auto& b : blocks)
    for (int x : b) order.emplace_back(x, ++pos);
  std::sort(order.begin(), order.end());
  std::vector<int> images(order.size());
  for (std::size_t v = 0; v < order.size(); ++v) images[v] = order[v].second;
  return Permutation(std::move(images));
}

// The ordering permutation of a fiber sequence: rank in increasing order
// maps to position in the sequence.
Permutation fiber_twist(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> images(seq.size());
  for (std::size_t v = 0; v < sorted.size(); ++v) {
    std::size_t p = 0;
    while (seq[p] != sorted[v]) ++p;
    images[v] = static_cast<int>(p) + 1;
  }
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> fibers_of(const FinSetMap& f) {
  std::vector<std::vector<int>> out(f.m);
  for (int u = 1; u <= f.n; ++u) out[f(u) - 1].push_back(u);  // increasing
  return out;
}

// All tuples of the given length with nonnegative entries summing to at
// most `bound`.
void splittings(int length, int bound, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == length) {
    out.push_back(current);
    return;
  }
  for (int v = 0; v <= bound; ++v) {
    current.push_back(v);
    splittings(length, bound - v, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> all_splittings(int length, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  splittings(length, bound, current, out);
  return out;
}

}  // namespace

SetOperad::SetOperad(Kind kind, int max_arity) : kind_(kind), max_arity_(max_arity) {
  if (max_arity < 1) throw std::invalid_argument("SetOperad: maximal arity must be at least 1");
  if (max_arity > 20)
    throw std::invalid_argument("SetOperad: truncation arities beyond 20 are not supported");
  name_ = kind == Kind::Orderings ? "orderings" : "terminal";
}

void SetOperad::check_arity(int n) const {
  if (n < 0) throw std::invalid_argument("operad '" + name_ + "': negative arity");
  if (n > max_arity_)
    throw std::invalid_argument("operad '" + name_ + "' is truncated at arity " +
                                std::to_string(max_arity_) + ", requested " + std::to_string(n));
}

long long SetOperad::size(int n) const {
  check_arity(n);
  return kind_ == Kind::Orderings ? factorial(n) : 1;
}

long long SetOperad::unit() const { return 0; }

long long SetOperad::gamma(long long a, const std::vector<std::pair<int, long long>>& parts) const {
  const int n = static_cast<int>(parts.size());
  check_arity(n);
  if (a < 0 || a >= size(n)) throw std::invalid_argument("operad gamma: element out of range");
  int total = 0;
  for (const auto& [arity, idx] : parts) {
    if (idx < 0 || idx >= size(arity))
      throw std::invalid_argument("operad gamma: element out of range");
    total += arity;
  }
  check_arity(total);
  if (kind_ == Kind::Terminal) return 0;
  std::vector<Permutation> perms;
  perms.reserve(parts.size());
  for (const auto& [arity, idx] : parts) perms.push_back(perm_unrank(arity, idx));
  return perm_rank(gamma_perm(perm_unrank(n, a), perms));
}

long long SetOperad::act(int n, long long a, const Permutation& chi) const {
  check_arity(n);
  if (a < 0 || a >= size(n)) throw std::invalid_argument("operad act: element out of range");
  if (chi.degree() != n)
    throw std::invalid_argument("operad act: permutation degree does not match the arity");
  if (kind_ == Kind::Terminal) return 0;
  return perm_rank(perm_unrank(n, a).compose(chi));
}

SetOperad as_operad(int max_arity) {
  SetOperad P(SetOperad::Kind::Orderings, max_arity);
  if (!validate_operad_laws(P, std::min(3, max_arity)))
    throw std::logic_error("as_operad: law check failed");
  return P;
}

SetOperad com_operad(int max_arity) {
  SetOperad P(SetOperad::Kind::Terminal, max_arity);
  if (!validate_operad_laws(P, std::min(3, max_arity)))
    throw std::logic_error("com_operad: law check failed");
  return P;
}

bool validate_operad_laws(const SetOperad& P, int bound) {
  if (P.size(0) != 1) return false;

  // unit laws
  for (int n = 0; n <= bound; ++n)
    for (long long b = 0; b < P.size(n); ++b) {
      if (P.gamma(P.unit(), {{n, b}}) != b) return false;
      const std::vector<std::pair<int, long long>> units(n, {1, P.unit()});
      if (P.gamma(b, units) != b) return false;
    }

  // the action is a right action
  for (int n = 0; n <= bound; ++n)
    for (long long a = 0; a < P.size(n); ++a) {
      if (P.act(n, a, Permutation::identity(n)) != a) return false;
      for (const auto& s : all_permutations(n))
        for (const auto& t : all_permutations(n))
          if (P.act(n, P.act(n, a, s), t) != P.act(n, a, s.compose(t))) return false;
    }

  // enumerate one substitution level: arities, then element tuples
  const auto each_gamma = [&](int n, const auto& visit) {
    for (const auto& arities : all_splittings(n, bound)) {
      std::vector<std::pair<int, long long>> parts(n);
      for (int r = 0; r < n; ++r) parts[r] = {arities[r], 0};
      while (true) {
        visit(parts);
        int r = n - 1;
        for (; r >= 0; --r) {
          if (++parts[r].second < P.size(parts[r].first)) break;
          parts[r].second = 0;
        }
        if (r < 0) break;
      }
    }
  };

  bool ok = true;

  for (int n = 0; n <= bound && ok; ++n)
    for (long long a = 0; a < P.size(n) && ok; ++a)
      each_gamma(n, [&](const std::vector<std::pair<int, long long>>& parts) {
        if (!ok) return;
        int total = 0;
        std::vector<int> widths(parts.size());
        for (std::size_t r = 0; r < parts.size(); ++r) total += widths[r] = parts[r].first;
        const long long glued = P.gamma(a, parts);

        // associativity: substitute a third layer both ways
        each_gamma(total, [&](const std::vector<std::pair<int, long long>>& inner) {
          if (!ok) return;
          const long long lhs = P.gamma(glued, inner);
          std::vector<std::pair<int, long long>> collapsed(parts.size());
          int offset = 0;
          for (std::size_t r = 0; r < parts.size(); ++r) {
            const std::vector<std::pair<int, long long>> block(
                inner.begin() + offset, inner.begin() + offset + widths[r]);
            int block_total = 0;
            for (const auto& [w, idx] : block) block_total += w;
            collapsed[r] = {block_total, P.gamma(parts[r].second, block)};
            offset += widths[r];
          }
          if (lhs != P.gamma(a, collapsed)) ok = false;
        });
        if (!ok) return;

        // equivariance in the outer element
        for (const auto& sigma : all_permutations(n)) {
          const Permutation inv = sigma.inverse();
          std::vector<std::pair<int, long long>> moved(parts.size());
          for (int r = 1; r <= n; ++r) moved[r - 1] = parts[inv(r) - 1];
          if (P.gamma(P.act(n, a, sigma), parts) !=
              P.act(total, P.gamma(a, moved), block_perm(sigma, widths))) {
            ok = false;
            return;
          }
        }

        // equivariance in the inputs, one slot at a time
        for (std::size_t r = 0; r < parts.size(); ++r)
          for (const auto& tau : all_permutations(widths[r])) {
            auto twisted = parts;
            twisted[r].second = P.act(widths[r], parts[r].second, tau);
            Permutation sum;
            for (std::size_t q = 0; q < parts.size(); ++q)
              sum = perm_sum(sum, q == r ? tau : Permutation::identity(widths[q]));
            if (P.gamma(a, twisted) != P.act(total, glued, sum)) {
              ok = false;
              return;
            }
          }
      });

  return ok;
}

FPMorphism make_fp(const SetOperad& P, FinSetMap f, std::vector<long long> omega) {
  FPMorphism m{std::move(f), std::move(omega)};
  validate_fp(P, m);
  return m;
}

void validate_fp(const SetOperad& P, const FPMorphism& m) {
  if (static_cast<int>(m.omega.size()) != m.f.m)
    throw std::invalid_argument("FPMorphism: need one twist per target");
  const auto fib = fibers_of(m.f);
  for (int i = 0; i < m.f.m; ++i) {
    const int arity = static_cast<int>(fib[i].size());
    if (m.omega[i] < 0 || m.omega[i] >= P.size(arity))
      throw std::invalid_argument("FPMorphism: twist out of range for its fiber size");
  }
}

FPMorphism identity_fp(const SetOperad& P, int n) {
  return make_fp(P, FinSetMap::identity(n), std::vector<long long>(n, P.unit()));
}

FPMorphism compose_fp(const SetOperad& P, const FPMorphism& second, const FPMorphism& first) {
  validate_fp(P, first);
  validate_fp(P, second);
  if (first.f.m != second.f.n) throw std::invalid_argument("compose_fp: sizes do not match");
  const auto ffib = fibers_of(first.f);
  const auto gfib = fibers_of(second.f);
  std::vector<long long> omega(second.f.m);
  for (int i = 1; i <= second.f.m; ++i) {
    std::vector<std::pair<int, long long>> parts;
    std::vector<std::vector<int>> blocks;
    int total = 0;
    for (int j : gfib[i - 1]) {
      parts.emplace_back(static_cast<int>(ffib[j - 1].size()), first.omega[j - 1]);
      blocks.push_back(ffib[j - 1]);
      total += static_cast<int>(ffib[j - 1].size());
    }
    const long long glued = P.gamma(second.omega[i - 1], parts);
    omega[i - 1] = P.act(total, glued, interleave_shuffle(blocks));
  }
  return FPMorphism{compose_set(second.f, first.f), std::move(omega)};
}

std::vector<FPMorphism> all_fp_morphisms(const SetOperad& P, int n, int m) {
  std::vector<FPMorphism> out;
  for (const auto& f : all_set_maps(n, m)) {
    const auto fib = fibers_of(f);
    std::vector<long long> omega(m, 0), sizes(m);
    for (int i = 0; i < m; ++i) sizes[i] = P.size(static_cast<int>(fib[i].size()));
    while (true) {
      out.push_back(FPMorphism{f, omega});
      int i = m - 1;
      for (; i >= 0; --i) {
        if (++omega[i] < sizes[i]) break;
        omega[i] = 0;
      }
      if (i < 0) break;
    }
  }
  return out;
}

FPMorphism nc_to_fp(const SetOperad& P, const NcMap& f) {
  if (P.kind() != SetOperad::Kind::Orderings)
    throw std::invalid_argument("nc_to_fp: the operad of orderings is required");
  std::vector<long long> omega(f.target_size());
  for (int i = 1; i <= f.target_size(); ++i) {
    P.size(static_cast<int>(f.fiber(i).size()));  // enforce the truncation bound
    omega[i - 1] = perm_rank(fiber_twist(f.fiber(i)));
  }
  return FPMorphism{f.underlying(), std::move(omega)};
}

NcMap fp_to_nc(const SetOperad& P, const FPMorphism& m) {
  if (P.kind() != SetOperad::Kind::Orderings)
    throw std::invalid_argument("fp_to_nc: the operad of orderings is required");
  validate_fp(P, m);
  const auto fib = fibers_of(m.f);
  std::vector<std::vector<int>> fibers(m.f.m);
  for (int i = 0; i < m.f.m; ++i) {
    const int a = static_cast<int>(fib[i].size());
    const Permutation twist = perm_unrank(a, m.omega[i]);
    fibers[i].resize(a);
    for (int v = 1; v <= a; ++v) fibers[i][twist(v) - 1] = fib[i][v - 1];
  }
  return NcMap(m.f.n, m.f.m, std::move(fibers));
}

bool is_fp2_square(const SetOperad& P, const FpSquare& square) {
  const FinSetMap& f1 = square.f1;
  const FinSetMap& f = square.f;
  const FinSetMap& p1 = square.phi1.f;
  const FinSetMap& p = square.phi.f;
  if (f1.n != p1.n || f1.m != p.n || p1.m != f.n || p.m != f.m) return false;
  validate_fp(P, square.phi);
  validate_fp(P, square.phi1);
  // commutes and is a bijection onto the fiber product
  std::set<std::pair<int, int>> seen;
  for (int u = 1; u <= f1.n; ++u) {
    if (p(f1(u)) != f(p1(u))) return false;
    if (!seen.insert({f1(u), p1(u)}).second) return false;
  }
  long long pairs = 0;
  for (int s = 1; s <= p.n; ++s)
    for (int t = 1; t <= f.n; ++t)
      if (p(s) == f(t)) ++pairs;
  if (pairs != f1.n) return false;
  // the vertical twists agree along the bottom map
  for (int t = 1; t <= f.n; ++t)
    if (square.phi1.omega[t - 1] != square.phi.omega[f(t) - 1]) return false;
  return true;
}

FpSquare pullback_fp2(const SetOperad& P, const FinSetMap& f, const FPMorphism& phi) {
  validate_fp(P, phi);
  if (f.m != phi.f.m) throw std::invalid_argument("pullback_fp2: targets do not match");
  const auto bottom_fib = fibers_of(f);
  std::vector<int> top, left;
  for (int s = 1; s <= phi.f.n; ++s)
    for (int t : bottom_fib[phi.f(s) - 1]) {
      top.push_back(s);
      left.push_back(t);
    }
  const int u = static_cast<int>(top.size());
  std::vector<long long> omega1(f.n);
  for (int t = 1; t <= f.n; ++t) omega1[t - 1] = phi.omega[f(t) - 1];
  FpSquare out{FinSetMap(u, phi.f.n, std::move(top)),
               FPMorphism{FinSetMap(u, f.n, std::move(left)), std::move(omega1)}, f, phi};
  validate_fp(P, out.phi1);
  return out;
}

FpSpan make_fp_span(const SetOperad& P, int src, int dst, FPMorphism phi, FinSetMap f) {
  validate_fp(P, phi);
  if (phi.f.m != src || f.m != dst || phi.f.n != f.n)
    throw std::invalid_argument("make_fp_span: leg sizes do not match");
  return FpSpan{src, dst, phi.f.n, std::move(phi), std::move(f)};
}

FpSpan identity_fp_span(const SetOperad& P, int n) {
  return make_fp_span(P, n, n, identity_fp(P, n), FinSetMap::identity(n));
}

FpSpan relabel_fp_span(const SetOperad& P, const FpSpan& s, const Permutation& rho) {
  if (rho.degree() != s.mid)
    throw std::invalid_argument("relabel_fp_span: the renaming must permute the middle set");
  const Permutation inv = rho.inverse();
  std::vector<int> phi_values(s.mid), f_values(s.mid);
  for (int u = 1; u <= s.mid; ++u) {
    phi_values[u - 1] = s.phi.f(inv(u));
    f_values[u - 1] = s.f(inv(u));
  }
  const auto fib = fibers_of(s.phi.f);
  std::vector<long long> omega(s.src);
  for (int i = 0; i < s.src; ++i) {
    const auto& old_sorted = fib[i];
    std::vector<int> renamed;
    renamed.reserve(old_sorted.size());
    for (int x : old_sorted) renamed.push_back(rho(x));
    std::sort(renamed.begin(), renamed.end());
    // rank v of the renamed fiber came from some rank of the old fiber
    std::vector<int> images(renamed.size());
    for (std::size_t v = 0; v < renamed.size(); ++v) {
      const int pre = inv(renamed[v]);
      std::size_t w = 0;
      while (old_sorted[w] != pre) ++w;
      images[v] = static_cast<int>(w) + 1;
    }
    omega[i] = P.act(static_cast<int>(renamed.size()), s.phi.omega[i],
                     Permutation(std::move(images)));
  }
  return make_fp_span(P, s.src, s.dst,
                      FPMorphism{FinSetMap(s.mid, s.src, std::move(phi_values)), std::move(omega)},
                      FinSetMap(s.mid, s.dst, std::move(f_values)));
}

FpSpan normalize_fp(const SetOperad& P, const FpSpan& s) {
  if (s.mid > 8) throw std::invalid_argument("normalize_fp: middle set too large");
  using Key = std::tuple<std::vector<int>, std::vector<long long>, std::vector<int>>;
  FpSpan best = s;
  Key best_key{s.phi.f.values, s.phi.omega, s.f.values};
  for (const auto& rho : all_permutations(s.mid)) {
    FpSpan candidate = relabel_fp_span(P, s, rho);
    Key key{candidate.phi.f.values, candidate.phi.omega, candidate.f.values};
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  }
  return best;
}

FpSpan compose_span_fp2(const SetOperad& P, const FpSpan& second, const FpSpan& first) {
  if (first.dst != second.src)
    throw std::invalid_argument("compose_span_fp2: objects do not match");
  const FpSquare b = pullback_fp2(P, first.f, second.phi);
  FPMorphism vert = compose_fp(P, first.phi, b.phi1);
  FinSetMap horiz = compose_set(second.f, b.f1);
  return normalize_fp(P, make_fp_span(P, first.src, second.dst, std::move(vert),
                                      std::move(horiz)));
}

std::vector<FpSpan> all_fp_spans(const SetOperad& P, int n, int m, int max_mid) {
  std::vector<FpSpan> out;
  std::set<std::tuple<int, std::vector<int>, std::vector<long long>, std::vector<int>>> seen;
  for (int mid = 0; mid <= max_mid; ++mid)
    for (const auto& phi : all_fp_morphisms(P, mid, n))
      for (const auto& f : all_set_maps(mid, m)) {
        FpSpan normal = normalize_fp(P, make_fp_span(P, n, m, phi, f));
        if (seen.insert({mid, normal.phi.f.values, normal.phi.omega, normal.f.values}).second)
          out.push_back(std::move(normal));
      }
  return out;
}

FreeElement make_free_element(const SetOperad& P, int arity, long long element,
                              std::vector<int> points, int points_size) {
  if (arity > 8) throw std::invalid_argument("make_free_element: arity too large");
  if (element < 0 || element >= P.size(arity))
    throw std::invalid_argument("make_free_element: element out of range");
  if (static_cast<int>(points.size()) != arity)
    throw std::invalid_argument("make_free_element: need one point per input slot");
  for (int x : points)
    if (x < 1 || x > points_size)
      throw std::invalid_argument("make_free_element: point out of range");
  // canonical representative: least simultaneous right translate
  long long best_element = element;
  std::vector<int> best_points = points;
  for (const auto& sigma : all_permutations(arity)) {
    const long long e = P.act(arity, element, sigma);
    std::vector<int> t(arity);
    for (int i = 1; i <= arity; ++i) t[i - 1] = points[sigma(i) - 1];
    if (std::tie(e, t) < std::tie(best_element, best_points)) {
      best_element = e;
      best_points = std::move(t);
    }
  }
  return FreeElement{arity, best_element, std::move(best_points), points_size};
}

FreeElement span_to_free(const SetOperad& P, const FpSpan& s) {
  if (s.src != 1)
    throw std::invalid_argument("span_to_free: the span must start at the one-point object");
  std::vector<int> points(s.mid);
  for (int u = 1; u <= s.mid; ++u) points[u - 1] = s.f(u);
  return make_free_element(P, s.mid, s.phi.omega[0], std::move(points), s.dst);
}

}  // namespace qprop
