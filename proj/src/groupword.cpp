#include "qprop/groupword.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qprop {

namespace {

void check_letter(const GroupLetter& l, int rank, const char* what) {
  if (l.gen < 1 || l.gen > rank)
    throw std::invalid_argument(std::string(what) + ": generator index out of range");
  if (l.exp != 1 && l.exp != -1)
    throw std::invalid_argument(std::string(what) + ": exponent must be +1 or -1");
}

}  // namespace

bool is_reduced(const std::vector<GroupLetter>& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i].gen == letters[i + 1].gen && letters[i].exp == -letters[i + 1].exp)
      return false;
  return true;
}

GroupWord reduce(std::vector<GroupLetter> letters) {
  std::vector<GroupLetter> stack;
  stack.reserve(letters.size());
  for (const GroupLetter& l : letters) {
    if (l.exp != 1 && l.exp != -1)
      throw std::invalid_argument("reduce: exponent must be +1 or -1");
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return GroupWord{std::move(stack)};
}

GroupWord word_mul(const GroupWord& a, const GroupWord& b) {
  std::vector<GroupLetter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return reduce(std::move(letters));
}

GroupWord word_inverse(const GroupWord& a) {
  std::vector<GroupLetter> letters;
  letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    letters.push_back({it->gen, -it->exp});
  return GroupWord{std::move(letters)};  // reversing a reduced word keeps it reduced
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
  std::vector<GroupLetter> letters;
  for (const GroupLetter& l : w.letters) {
    if (l.gen < 1 || l.gen > static_cast<int>(images.size()))
      throw std::invalid_argument("substitute: generator index out of range");
    const GroupWord& img = l.exp == 1 ? images[l.gen - 1] : word_inverse(images[l.gen - 1]);
    letters.insert(letters.end(), img.letters.begin(), img.letters.end());
  }
  return reduce(std::move(letters));
}

GroupWord parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<GroupLetter> letters;
  std::string token;
  while (in >> token) {
    if (token == "e") continue;
    if (token.size() < 2 || token[0] != 'x')
      throw std::invalid_argument("parse_word: bad letter '" + token + "'");
    const auto caret = token.find('^');
    int gen = 0, exp = 1;
    try {
      gen = std::stoi(token.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      if (caret != std::string::npos) exp = std::stoi(token.substr(caret + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_word: bad letter '" + token + "'");
    }
    if (gen < 1) throw std::invalid_argument("parse_word: bad letter '" + token + "'");
    for (int r = 0; r < (exp < 0 ? -exp : exp); ++r)
      letters.push_back({gen, exp < 0 ? -1 : 1});
  }
  return reduce(std::move(letters));
}

std::string format_word(const GroupWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (const GroupLetter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(l.gen);
    if (l.exp == -1) out += "^-1";
  }
  return out;
}

GroupHom::GroupHom(int source_rank, int target_rank, std::vector<GroupWord> images)
    : source_rank(source_rank), target_rank(target_rank), images(std::move(images)) {
  if (source_rank < 0 || target_rank < 0)
    throw std::invalid_argument("GroupHom: negative rank");
  if (static_cast<int>(this->images.size()) != source_rank)
    throw std::invalid_argument("GroupHom: need one image word per source generator");
  for (const GroupWord& w : this->images) {
    for (const GroupLetter& l : w.letters) check_letter(l, target_rank, "GroupHom");
    if (!is_reduced(w.letters)) throw std::invalid_argument("GroupHom: image word not reduced");
  }
}

GroupHom GroupHom::identity(int n) {
  std::vector<GroupWord> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1].letters = {{i, 1}};
  return GroupHom(n, n, std::move(images));
}

GroupHom compose_hom(const GroupHom& second, const GroupHom& first) {
  if (first.target_rank != second.source_rank)
    throw std::invalid_argument("compose_hom: ranks do not match");
  std::vector<GroupWord> images;
  images.reserve(first.images.size());
  for (const GroupWord& w : first.images) images.push_back(substitute(w, second.images));
  return GroupHom(first.source_rank, second.target_rank, std::move(images));
}

bool hom_equal(const GroupHom& a, const GroupHom& b) { return a == b; }

LinMap eval_hom_unchecked(const GroupHom& h, const BialgebraData& H,
                          const std::vector<Permutation>& routing) {
  if (!H.antipode)
    throw std::invalid_argument("eval_hom: '" + H.name + "' has no antipode");
  const int n = h.target_rank, m = h.source_rank, d = H.dim;

  // scan positions of each generator's occurrences: (word, letter) pairs in
  // word-major order
  std::vector<std::vector<std::pair<int, int>>> occs(n);
  for (int j = 0; j < m; ++j)
    for (std::size_t l = 0; l < h.images[j].letters.size(); ++l)
      occs[h.images[j].letters[l].gen - 1].emplace_back(j, static_cast<int>(l));

  std::vector<Permutation> route(n);
  if (!routing.empty() && static_cast<int>(routing.size()) != n)
    throw std::invalid_argument("eval_hom: need one routing permutation per target generator");
  for (int i = 0; i < n; ++i) {
    route[i] = routing.empty() ? Permutation::identity(static_cast<int>(occs[i].size()))
                               : routing[i];
    if (route[i].degree() != static_cast<int>(occs[i].size()))
      throw std::invalid_argument("eval_hom: routing degree must match the occurrence count");
  }

  LinMap out(d, n, m);
  std::map<Index, Rational> col;
  // copies[j][l]: the comultiplication copy assigned to letter l of word j
  std::vector<std::vector<int>> copies(m);
  for (int j = 0; j < m; ++j) copies[j].assign(h.images[j].letters.size(), 0);
  std::vector<std::vector<std::pair<int, Rational>>> word_terms(m);

  for (Index c = 0; c < out.dom_size(); ++c) {
    const auto digits = index_to_digits(c, d, n);
    col.clear();

    // expand every input factor's iterated comultiplication, then distribute
    // the copies over the occurrences and multiply out each word
    std::vector<std::vector<std::pair<std::vector<int>, Rational>>> expansions(n);
    for (int i = 0; i < n; ++i)
      expansions[i] = comult_terms(H, static_cast<int>(occs[i].size()), digits[i]);

    std::vector<std::size_t> pick(n, 0);
    while (true) {
      Rational coeff = 1;
      bool dead = false;
      for (int i = 0; i < n && !dead; ++i) {
        if (expansions[i].empty()) {
          dead = true;
          break;
        }
        const auto& [tuple, v] = expansions[i][pick[i]];
        coeff *= v;
        for (std::size_t k = 0; k < occs[i].size(); ++k) {
          const auto [wj, wl] = occs[i][k];
          copies[wj][wl] = tuple[route[i](static_cast<int>(k) + 1) - 1];
        }
      }
      if (dead) break;

      // multiply each word left to right, branching through the antipode at
      // exponent -1; the empty word is the unit
      for (int j = 0; j < m; ++j) {
        auto& terms = word_terms[j];
        terms.clear();
        const auto& letters = h.images[j].letters;
        if (letters.empty()) {
          for (int a = 0; a < d; ++a)
            if (H.unit[a] != 0) terms.emplace_back(a, H.unit[a]);
          continue;
        }
        std::vector<std::pair<int, Rational>> factor, next;
        for (std::size_t l = 0; l < letters.size(); ++l) {
          factor.clear();
          const int digit = copies[j][l];
          if (letters[l].exp == 1)
            factor.emplace_back(digit, 1);
          else
            for (const auto& [row, v] : H.antipode->column(digit))
              factor.emplace_back(static_cast<int>(row), v);
          if (l == 0) {
            terms = factor;
            continue;
          }
          next.clear();
          for (const auto& [a, v] : terms)
            for (const auto& [b, w] : factor)
              for (const auto& [row, u] : H.mult.column(static_cast<Index>(a) * d + b))
                next.emplace_back(static_cast<int>(row), v * w * u);
          std::swap(terms, next);
        }
      }

      // combine the word values into output tensors
      std::vector<std::pair<Index, Rational>> partial{{0, coeff}}, grown;
      for (int j = 0; j < m; ++j) {
        grown.clear();
        for (const auto& [idx, v] : partial)
          for (const auto& [a, w] : word_terms[j]) grown.emplace_back(idx * d + a, v * w);
        std::swap(partial, grown);
      }
      for (const auto& [idx, v] : partial) {
        auto it = col.find(idx);
        if (it == col.end())
          col.emplace(idx, v);
        else {
          it->second += v;
          if (it->second == 0) col.erase(it);
        }
      }

      int i = n - 1;
      for (; i >= 0; --i) {
        if (++pick[i] < expansions[i].size()) break;
        pick[i] = 0;
      }
      if (i < 0) break;
    }
    for (const auto& [row, v] : col) out.add(row, c, v);
  }
  return out;
}

LinMap eval_hom_on_hopf(const GroupHom& h, const BialgebraData& H) {
  if (!H.axioms.bialgebra() || !H.axioms.antipode_valid)
    throw std::invalid_argument("eval_hom_on_hopf: '" + H.name +
                                "' is not a Hopf structure (bialgebra with valid antipode)");
  if (!H.axioms.cocommutative)
    throw std::invalid_argument("eval_hom_on_hopf: '" + H.name + "' is not cocommutative");
  return eval_hom_unchecked(h, H);
}

GroupHom xi_generator(int k, int i) {
  if (k < 1 || i < 1 || i > k) throw std::invalid_argument("xi_generator: index out of range");
  std::vector<GroupWord> images(k);
  for (int j = 1; j <= k; ++j) images[j - 1].letters = {{j, 1}};
  if (i >= 2) images[i - 2].letters = {{i - 1, 1}, {i, 1}};
  images[i - 1].letters = {{i, -1}};
  if (i + 1 <= k) images[i].letters = {{i, 1}, {i + 1, 1}};
  return GroupHom(k, k, std::move(images));
}

GroupHom xi(int k, const Permutation& perm) {
  if (perm.degree() != k + 1)
    throw std::invalid_argument("xi: the permutation must act on k+1 letters");
  // bubble-sort the one-line notation; swapping positions (p, p+1) divides
  // off one adjacent transposition on the right, so composing the generator
  // images in swap order rebuilds the permutation's image
  std::vector<int> v(perm.images());
  GroupHom h = GroupHom::identity(k);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < static_cast<int>(v.size()); ++p)
      if (v[p] > v[p + 1]) {
        std::swap(v[p], v[p + 1]);
        h = compose_hom(xi_generator(k, p + 1), h);
        moved = true;
      }
  }
  return h;
}

PairGroupElement::PairGroupElement(int base, std::vector<GroupLetter> word)
    : base(base), word(std::move(word)) {
  if (base < 1) throw std::invalid_argument("PairGroupElement: base set must be nonempty");
  for (const GroupLetter& l : this->word) {
    if (l.gen < 2 || l.gen > base)
      throw std::invalid_argument("PairGroupElement: generator index out of range");
    if (l.exp != 1 && l.exp != -1)
      throw std::invalid_argument("PairGroupElement: exponent must be +1 or -1");
  }
  if (!is_reduced(this->word)) throw std::invalid_argument("PairGroupElement: word not reduced");
}

PairGroupElement PairGroupElement::identity(int base) { return PairGroupElement(base, {}); }

PairGroupElement pair_gen(int base, int x, int y) {
  if (x < 1 || x > base || y < 1 || y > base)
    throw std::invalid_argument("pair_gen: element out of range");
  std::vector<GroupLetter> letters;
  if (x >= 2) letters.push_back({x, 1});
  if (y >= 2) letters.push_back({y, -1});
  return PairGroupElement(base, reduce(std::move(letters)).letters);
}

PairGroupElement pair_group_mul(const PairGroupElement& a, const PairGroupElement& b) {
  if (a.base != b.base)
    throw std::invalid_argument("pair_group_mul: elements live over different base sets");
  std::vector<GroupLetter> letters = a.word;
  letters.insert(letters.end(), b.word.begin(), b.word.end());
  return PairGroupElement(a.base, reduce(std::move(letters)).letters);
}

PairGroupElement pair_group_inverse(const PairGroupElement& a) {
  return PairGroupElement(a.base, word_inverse(GroupWord{a.word}).letters);
}

PairGroupElement pair_group_map(const FinSetMap& alpha, const PairGroupElement& e) {
  if (alpha.n != e.base)
    throw std::invalid_argument("pair_group_map: the map must start at the element's base set");
  std::vector<GroupLetter> letters;
  for (const GroupLetter& l : e.word) {
    GroupWord img{pair_gen(alpha.m, alpha(l.gen), alpha(1)).word};
    if (l.exp == -1) img = word_inverse(img);
    letters.insert(letters.end(), img.letters.begin(), img.letters.end());
  }
  return PairGroupElement(alpha.m, reduce(std::move(letters)).letters);
}

}  // namespace qprop
