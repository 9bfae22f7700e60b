#include "qprop/suites.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qprop/bialg.hpp"
#include "qprop/encode.hpp"
#include "qprop/eval.hpp"
#include "qprop/groupword.hpp"
#include "qprop/operad.hpp"
#include "qprop/span.hpp"

namespace qprop {

namespace {

struct Tally {
  long long passed = 0;
  long long total = 0;

  void check(bool ok) {
    ++total;
    if (ok) ++passed;
  }
};

Permutation random_perm(std::mt19937& rng, int n) {
  long long size = 1;
  for (int i = 2; i <= n; ++i) size *= i;
  return perm_unrank(n, std::uniform_int_distribution<long long>(0, size - 1)(rng));
}

// ---- criterion 1: the closed composition formula against the span oracle

CriterionResult criterion_phi_oracle() {
  Tally t;
  const auto agree = [&](const EndoPair& a, const EndoPair& b) {
    const EndoPair via_spans =
        endo_from_span(compose_span(endo_to_span(a), endo_to_span(b)));
    t.check(via_spans == endo_compose(a, b));
  };
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m)) agree({n, sigma}, {m, tau});
  std::mt19937 rng(41001);
  std::uniform_int_distribution<int> size_dist(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size_dist(rng), m = size_dist(rng);
    agree({n, random_perm(rng, n)}, {m, random_perm(rng, m)});
  }
  return {1, "closed-form composition of fold endomorphisms matches span composition",
          t.passed, t.total};
}

// ---- criterion 2: the transpose-and-substitute description

CriterionResult criterion_phi_formula() {
  Tally t;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& sigma : all_permutations(n))
        for (const auto& tau : all_permutations(m)) {
          const Permutation via_formula = transpose_perm(n, m).compose(
              gamma_perm(tau, std::vector<Permutation>(m, sigma)));
          t.check(phi_compose(sigma, tau) == via_formula);
        }
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      t.check(transpose_perm(n, m) ==
              phi_compose(Permutation::identity(n), Permutation::identity(m)));
  return {2, "the transpose-and-substitution description of the composition permutation",
          t.passed, t.total};
}

// ---- criterion 3: power operations compose by the same permutation

CriterionResult criterion_psi_composition() {
  Tally t;
  for (const char* name : {"sweedler4", "s3"}) {
    const BialgebraData b = builtin(name);
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m)
        for (const auto& sigma : all_permutations(n))
          for (const auto& tau : all_permutations(m))
            t.check(compose(psi(n, sigma, b), psi(m, tau, b)) ==
                    psi(n * m, phi_compose(sigma, tau), b));
  }
  return {3, "power operations compose via the composition permutation", t.passed, t.total};
}

// ---- criteria 4 and 5: the exchange law on squares

std::vector<Bimorphism> square_family(int max_side, int max_target) {
  std::vector<Bimorphism> out;
  for (int v = 0; v <= max_target; ++v)
    for (int ts = 0; ts <= max_side; ++ts)
      for (int ss = 0; ss <= max_side; ++ss)
        for (const auto& f : all_nc_maps(ts, v))
          for (const auto& phi : all_nc_maps(ss, v))
            out.push_back(pullback(DoubleKind::Fas, f, phi));
  return out;
}

Bimorphism counit_of_product_square() {
  return pullback(DoubleKind::Fas, perm_to_fold(Permutation::identity(2)),
                  NcMap(0, 1, {{}}));
}

CriterionResult criterion_mackey() {
  Tally t;
  const auto squares = square_family(3, 2);
  for (const char* name : {"sweedler4", "s3", "s3dual"}) {
    const BialgebraData b = builtin(name);
    for (const auto& square : squares) t.check(mackey_check(square, b));
  }
  t.check(!mackey_check(counit_of_product_square(), builtin("nonbialg")));
  return {4, "the exchange law holds on bialgebras and detects the broken structure",
          t.passed, t.total};
}

bool retractions_hold(const BialgebraData& b, Tally* tally) {
  bool all = true;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= m; ++n)
      for (const auto& g : all_set_maps(n, m)) {
        const NcMap lifted = lift_set_map(g);
        if (!is_injection(lifted)) continue;
        const bool ok =
            compose(eval_vert(lifted, b), eval_horiz(lifted, b)) == LinMap::identity(b.dim, n);
        all = all && ok;
        if (tally) tally->check(ok);
      }
  return all;
}

CriterionResult criterion_mackey_reduction() {
  Tally t;
  const auto squares = square_family(2, 2);
  for (const auto& name : builtin_names()) {
    const BialgebraData b = builtin(name);
    const bool retractions = retractions_hold(b, &t);
    bool full = true, elementary = true;
    for (const auto& square : squares) {
      const bool ok = mackey_check(square, b);
      full = full && ok;
      if (is_elementary_bimorphism(square)) elementary = elementary && ok;
    }
    // the claimed reduction: the full exchange check is equivalent to
    // retractions plus elementary squares alone
    t.check(full == (retractions && elementary));
  }
  return {5, "the exchange-law check reduces to retractions and elementary squares",
          t.passed, t.total};
}

// ---- criterion 6: plain spans as matrices

CriterionResult criterion_matrix_functor() {
  Tally t;
  std::map<std::pair<int, int>, std::vector<Span>> spans;
  std::map<std::pair<int, int>, std::vector<NatMatrix>> matrices;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      auto& list = spans[{n, m}] = all_spans(DoubleKind::F, n, m, 4);
      auto& mats = matrices[{n, m}];
      mats.reserve(list.size());
      for (const auto& s : list) {
        mats.push_back(qf_to_matrix(s));
        t.check(qf_from_matrix(mats.back()) == s);
      }
    }
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int k = 0; k <= 3; ++k) {
        const auto& first = spans[{n, m}];
        const auto& second = spans[{m, k}];
        const auto& first_m = matrices[{n, m}];
        const auto& second_m = matrices[{m, k}];
        for (std::size_t i = 0; i < first.size(); ++i)
          for (std::size_t j = 0; j < second.size(); ++j)
            t.check(qf_to_matrix(compose_span(second[j], first[i])) ==
                    matrix_multiply(second_m[j], first_m[i]));
      }
  return {6, "plain spans are matrices and composition is the matrix product", t.passed,
          t.total};
}

// ---- criterion 7: word, shuffle, and two-sided encodings

CriterionResult criterion_encodings() {
  Tally t;
  const std::vector<int> word{1, 1, 2, 1, 2, 2, 2, 1, 1};  // x x y x y y y x x
  const Shuffle sh = word_to_shuffle(word, 2);
  t.check(sh.type == std::vector<int>{5, 4});
  t.check(sh.images == std::vector<int>{1, 2, 4, 8, 9, 3, 5, 6, 7});
  t.check(shuffle_to_word(sh) == word);
  for (int n = 0; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      for (const auto& s : all_spans(DoubleKind::Fas2, n, m, 4))
        t.check(mon_span_of_words(mon_words_of_span(s)) == s);
      for (const auto& s : all_spans(DoubleKind::Fas, n, m, 4))
        t.check(qfas_decode(qfas_encode(s)) == s);
    }
  return {7, "word, shuffle, and two-sided encodings round-trip", t.passed, t.total};
}

// ---- criterion 8: the symmetric-group action on free-group automorphisms

CriterionResult criterion_xi() {
  Tally t;
  for (int k = 2; k <= 5; ++k) {
    const GroupHom id = GroupHom::identity(k);
    std::vector<GroupHom> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(xi_generator(k, i));
    for (int i = 1; i <= k; ++i) {
      t.check(hom_equal(compose_hom(gens[i - 1], gens[i - 1]), id));  // involution
      for (int j = i + 1; j <= k; ++j) {
        const GroupHom ij = compose_hom(gens[i - 1], gens[j - 1]);
        const GroupHom once = compose_hom(ij, ij);
        if (j == i + 1)
          t.check(hom_equal(compose_hom(once, ij), id));  // braid relation
        else
          t.check(hom_equal(once, id));  // distant generators commute
      }
    }
  }
  const BialgebraData h = builtin("s3");
  std::map<std::vector<int>, LinMap> act;
  for (const auto& rho : all_permutations(3))
    act.emplace(rho.images(), eval_hom_on_hopf(xi(2, rho), h));
  for (const auto& a : all_permutations(3))
    for (const auto& b : all_permutations(3))
      t.check(act.at(a.compose(b).images()) ==
              compose(act.at(b.images()), act.at(a.images())));
  return {8, "the symmetric-group action on free-group automorphisms", t.passed, t.total};
}

// ---- criterion 9: evaluating free-group homomorphisms

GroupWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(1, rank);
  std::uniform_int_distribution<int> exp_dist(0, 1);
  std::vector<GroupLetter> letters;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i)
    letters.push_back({gen_dist(rng), exp_dist(rng) ? 1 : -1});
  return reduce(std::move(letters));
}

GroupHom random_hom(std::mt19937& rng, int source, int target, int max_len) {
  std::vector<GroupWord> images;
  for (int i = 0; i < source; ++i) images.push_back(random_word(rng, target, max_len));
  return GroupHom(source, target, std::move(images));
}

CriterionResult criterion_eval_hom() {
  Tally t;
  const BialgebraData h = builtin("s3");
  t.check(eval_hom_on_hopf(GroupHom(1, 2, {parse_word("x1 x2")}), h) == h.mult);
  t.check(eval_hom_on_hopf(GroupHom(2, 1, {parse_word("x1"), parse_word("x1")}), h) ==
          h.comult);
  t.check(eval_hom_on_hopf(GroupHom(1, 1, {parse_word("x1^-1")}), h) == *h.antipode);
  std::mt19937 rng(41009);
  std::uniform_int_distribution<int> rank(1, 2);
  for (const char* name : {"c2", "s3"}) {
    const BialgebraData b = builtin(name);
    for (int trial = 0; trial < 10; ++trial) {
      const int p = rank(rng), q = rank(rng), r = rank(rng);
      const GroupHom second = random_hom(rng, p, q, 3);
      const GroupHom first = random_hom(rng, r, p, 3);
      t.check(eval_hom_on_hopf(compose_hom(second, first), b) ==
              compose(eval_hom_on_hopf(first, b), eval_hom_on_hopf(second, b)));
    }
  }
  return {9, "free-group homomorphisms evaluate to structure maps functorially", t.passed,
          t.total};
}

// ---- criterion 10: ordering-independence in the (co)commutative cases

CriterionResult criterion_specializations() {
  Tally t;
  const BialgebraData cocomm = builtin("s3");
  const BialgebraData comm = builtin("s3dual");
  for (int n = 0; n <= 4; ++n)
    for (int m = (n == 0 ? 0 : 1); m <= 2; ++m)
      for (const auto& phi : all_nc_maps(n, m)) {
        const NcMap plain = lift_set_map(phi.underlying());
        t.check(eval_vert(phi, cocomm) == eval_vert(plain, cocomm));
        t.check(eval_horiz(phi, comm) == eval_horiz(plain, comm));
      }
  for (const BialgebraData* b : {&cocomm, &comm}) {
    for (int n = 0; n <= 4; ++n) {
      const LinMap base = psi(n, Permutation::identity(n), *b);
      for (const auto& sigma : all_permutations(n)) t.check(psi(n, sigma, *b) == base);
    }
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= 4; ++m)
        t.check(compose(psi(n, Permutation::identity(n), *b),
                        psi(m, Permutation::identity(m), *b)) ==
                psi(n * m, Permutation::identity(n * m), *b));
  }
  return {10, "ordering-independence in the commutative and cocommutative cases", t.passed,
          t.total};
}

// ---- criterion 11: twisted maps over an operad

CriterionResult criterion_operad() {
  Tally t;
  const SetOperad as = as_operad(8);
  const SetOperad com = com_operad(8);
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const auto ordered = all_nc_maps(n, m);
      t.check(all_fp_morphisms(as, n, m).size() == ordered.size());
      t.check(all_fp_morphisms(com, n, m).size() == all_set_maps(n, m).size());
      for (const auto& f : ordered) t.check(fp_to_nc(as, nc_to_fp(as, f)) == f);
    }
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (int k = 0; k <= 3; ++k) {
        for (const auto& a : all_nc_maps(n, m))
          for (const auto& b : all_nc_maps(m, k))
            t.check(compose_fp(as, nc_to_fp(as, b), nc_to_fp(as, a)) ==
                    nc_to_fp(as, compose_nc(b, a)));
        for (const auto& a : all_set_maps(n, m))
          for (const auto& b : all_set_maps(m, k)) {
            const FPMorphism composite = compose_fp(com, FPMorphism{b, std::vector<long long>(k, 0)},
                                                    FPMorphism{a, std::vector<long long>(m, 0)});
            t.check(composite.f == compose_set(b, a));
          }
      }
  const auto fp_of = [&](const Span& s) {
    return make_fp_span(as, s.src, s.dst, nc_to_fp(as, s.phi), s.f.underlying());
  };
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m)
      for (int k = 1; k <= 2; ++k)
        for (const auto& a : all_spans(DoubleKind::Fas2, n, m, 3))
          for (const auto& b : all_spans(DoubleKind::Fas2, m, k, 2))
            t.check(compose_span_fp2(as, fp_of(b), fp_of(a)) ==
                    normalize_fp(as, fp_of(compose_span(b, a))));
  for (const auto& raw : all_spans(DoubleKind::Fas2, 1, 2, 3)) {
    const FpSpan s = fp_of(raw);
    const FreeElement e = span_to_free(as, s);
    for (const auto& rho : all_permutations(s.mid))
      t.check(span_to_free(as, relabel_fp_span(as, s, rho)) == e);
  }
  return {11, "twisted maps over an operad generalize ordered and plain maps", t.passed,
          t.total};
}

// ---- criterion 12: axiom profiles

CriterionResult criterion_axioms() {
  Tally t;
  struct Profile {
    const char* name;
    int dim;
    bool is_bialgebra, commutative, cocommutative, antipode_valid;
  };
  const Profile profiles[] = {
      {"group_algebra(C2)", 2, true, true, true, true},
      {"group_algebra(C3)", 3, true, true, true, true},
      {"group_algebra(S3)", 6, true, false, true, true},
      {"dual_group_algebra(C2)", 2, true, true, true, true},
      {"dual_group_algebra(C3)", 3, true, true, true, true},
      {"dual_group_algebra(S3)", 6, true, true, false, true},
      {"sweedler4", 4, true, false, false, true},
      {"nonbialg_counterexample", 2, false, true, true, false},
  };
  for (const Profile& p : profiles) {
    const BialgebraData b = builtin(p.name);
    t.check(b.dim == p.dim);
    t.check(b.axioms.algebra());
    t.check(b.axioms.coalgebra());
    t.check(b.axioms.bialgebra() == p.is_bialgebra);
    t.check(b.axioms.commutative == p.commutative);
    t.check(b.axioms.cocommutative == p.cocommutative);
    t.check(b.axioms.antipode_valid == p.antipode_valid);
  }
  const AxiomReport broken = builtin("nonbialg").axioms;
  t.check(!broken.counit_multiplicative);
  t.check(broken.comult_multiplicative);
  t.check(broken.comult_preserves_unit);
  t.check(broken.counit_preserves_unit);
  t.check(!broken.antipode_present);
  return {12, "the axiom checker reproduces each builtin profile", t.passed, t.total};
}

}  // namespace

int criterion_count() { return 12; }

CriterionResult run_criterion(int number) {
  switch (number) {
    case 1: return criterion_phi_oracle();
    case 2: return criterion_phi_formula();
    case 3: return criterion_psi_composition();
    case 4: return criterion_mackey();
    case 5: return criterion_mackey_reduction();
    case 6: return criterion_matrix_functor();
    case 7: return criterion_encodings();
    case 8: return criterion_xi();
    case 9: return criterion_eval_hom();
    case 10: return criterion_specializations();
    case 11: return criterion_operad();
    case 12: return criterion_axioms();
    default:
      throw std::invalid_argument("criterion number must be between 1 and 12");
  }
}

std::string criterion_report_line(const CriterionResult& r) {
  std::ostringstream out;
  out << "CRITERION " << (r.number < 10 ? " " : "") << r.number << ' '
      << (r.pass() ? "PASS" : "FAIL") << " (" << r.passed << '/' << r.total << " cases) "
      << r.title;
  return out.str();
}

namespace {

const std::vector<std::pair<std::string, std::vector<int>>>& suite_table() {
  static const std::vector<std::pair<std::string, std::vector<int>>> table = {
      {"phi", {1, 2}},      {"psi", {3, 10}},    {"mackey", {4, 5}},
      {"encodings", {6, 7}}, {"xi", {8, 9}},      {"operad", {11}},
      {"axioms", {12}},
  };
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, criteria] : suite_table()) out.push_back(name);
  return out;
}

std::vector<int> suite_criteria(const std::string& name) {
  for (const auto& [suite, criteria] : suite_table())
    if (suite == name) return criteria;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult run_suite(const std::string& name) {
  SuiteResult out;
  out.name = name;
  out.pass = true;
  for (int k : suite_criteria(name)) {
    const CriterionResult r = run_criterion(k);
    out.passed += r.passed;
    out.total += r.total;
    out.pass = out.pass && r.pass();
  }
  return out;
}

std::string suite_report_line(const SuiteResult& r) {
  std::ostringstream out;
  out << "SUITE " << r.name << ' ' << (r.pass ? "PASS" : "FAIL") << " (" << r.passed << '/'
      << r.total << " cases)";
  return out.str();
}

}  // namespace qprop
