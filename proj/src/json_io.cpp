#include "qprop/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qprop {

namespace {

std::string ctx_str(const char* ctx) { return std::string(ctx); }

const Json& member(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object())
    throw std::invalid_argument(ctx_str(ctx) + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(ctx_str(ctx) + ": missing field '" + key + "'");
  return *it;
}

const Json* optional_member(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object())
    throw std::invalid_argument(ctx_str(ctx) + ": expected a JSON object");
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

int to_int(const Json& j, const char* ctx) {
  if (!j.is_number_integer())
    throw std::invalid_argument(ctx_str(ctx) + ": expected an integer");
  return j.get<int>();
}

long long to_long(const Json& j, const char* ctx) {
  if (!j.is_number_integer())
    throw std::invalid_argument(ctx_str(ctx) + ": expected an integer");
  return j.get<long long>();
}

std::vector<int> to_int_vector(const Json& j, const char* ctx) {
  if (!j.is_array())
    throw std::invalid_argument(ctx_str(ctx) + ": expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(to_int(x, ctx));
  return out;
}

Rational to_rational(const Json& j, const char* ctx) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument(ctx_str(ctx) + ": " + err.what());
    }
  }
  throw std::invalid_argument(ctx_str(ctx) + ": expected a rational as \"p/q\" or an integer");
}

std::vector<Rational> to_rational_vector(const Json& j, const char* ctx) {
  if (!j.is_array())
    throw std::invalid_argument(ctx_str(ctx) + ": expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(to_rational(x, ctx));
  return out;
}

const Json& array_member(const Json& j, const char* key, const char* ctx) {
  const Json& a = member(j, key, ctx);
  if (!a.is_array())
    throw std::invalid_argument(ctx_str(ctx) + ": field '" + key + "' must be an array");
  return a;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_json(buffer.str());
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("file '" + path + "' is not valid JSON");
  }
}

Json permutation_to_json(const Permutation& p) {
  Json j;
  j["images"] = p.images();
  return j;
}

Permutation permutation_from_json(const Json& j) {
  return Permutation(to_int_vector(member(j, "images", "permutation"), "permutation images"));
}

Json set_map_to_json(const FinSetMap& f) {
  Json j;
  j["n"] = f.n;
  j["m"] = f.m;
  j["values"] = f.values;
  return j;
}

FinSetMap set_map_from_json(const Json& j) {
  return FinSetMap(to_int(member(j, "n", "set map"), "set map n"),
                   to_int(member(j, "m", "set map"), "set map m"),
                   to_int_vector(member(j, "values", "set map"), "set map values"));
}

Json nc_map_to_json(const NcMap& f) {
  Json j;
  j["n"] = f.source_size();
  j["m"] = f.target_size();
  j["fibers"] = f.fibers();
  return j;
}

NcMap nc_map_from_json(const Json& j) {
  const Json& fibers = array_member(j, "fibers", "ordered map");
  std::vector<std::vector<int>> seqs;
  seqs.reserve(fibers.size());
  for (const auto& fib : fibers) seqs.push_back(to_int_vector(fib, "ordered map fibers"));
  return NcMap(to_int(member(j, "n", "ordered map"), "ordered map n"),
               to_int(member(j, "m", "ordered map"), "ordered map m"), std::move(seqs));
}

Json bimorphism_to_json(const Bimorphism& b) {
  Json j;
  j["kind"] = kind_name(b.kind);
  j["f1"] = nc_map_to_json(b.f1);
  j["phi1"] = nc_map_to_json(b.phi1);
  j["f"] = nc_map_to_json(b.f);
  j["phi"] = nc_map_to_json(b.phi);
  return j;
}

Bimorphism bimorphism_from_json(const Json& j) {
  const Json& kind = member(j, "kind", "square");
  if (!kind.is_string()) throw std::invalid_argument("square: field 'kind' must be a string");
  Bimorphism b;
  b.kind = kind_from_name(kind.get<std::string>());
  b.f1 = nc_map_from_json(member(j, "f1", "square"));
  b.phi1 = nc_map_from_json(member(j, "phi1", "square"));
  b.f = nc_map_from_json(member(j, "f", "square"));
  b.phi = nc_map_from_json(member(j, "phi", "square"));
  return b;
}

Json span_to_json(const Span& s) {
  Json j;
  j["kind"] = kind_name(s.kind);
  j["src"] = s.src;
  j["dst"] = s.dst;
  j["mid"] = s.mid;
  j["phi"] = nc_map_to_json(s.phi);
  j["f"] = nc_map_to_json(s.f);
  return j;
}

Span span_from_json(const Json& j) {
  const Json& kind = member(j, "kind", "span");
  if (!kind.is_string()) throw std::invalid_argument("span: field 'kind' must be a string");
  const Span s = make_span(kind_from_name(kind.get<std::string>()),
                           nc_map_from_json(member(j, "phi", "span")),
                           nc_map_from_json(member(j, "f", "span")));
  if (s.src != to_int(member(j, "src", "span"), "span src") ||
      s.dst != to_int(member(j, "dst", "span"), "span dst") ||
      s.mid != to_int(member(j, "mid", "span"), "span mid"))
    throw std::invalid_argument("span: declared sizes do not match the legs");
  return normalize(s);
}

Json matrix_to_json(const NatMatrix& m) {
  Json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["entries"] = m.entries;
  return j;
}

NatMatrix matrix_from_json(const Json& j) {
  NatMatrix m;
  m.rows = to_int(member(j, "rows", "matrix"), "matrix rows");
  m.cols = to_int(member(j, "cols", "matrix"), "matrix cols");
  for (const auto& row : array_member(j, "entries", "matrix")) {
    if (!row.is_array()) throw std::invalid_argument("matrix: entries must be an array of rows");
    std::vector<long long> r;
    for (const auto& x : row) r.push_back(to_long(x, "matrix entries"));
    m.entries.push_back(std::move(r));
  }
  validate_matrix(m);
  return m;
}

Json words_to_json(const WordTuple& w) {
  Json j;
  j["m"] = w.m;
  j["words"] = w.words;
  return j;
}

WordTuple words_from_json(const Json& j) {
  WordTuple w;
  w.m = to_int(member(j, "m", "word tuple"), "word tuple m");
  for (const auto& word : array_member(j, "words", "word tuple"))
    w.words.push_back(to_int_vector(word, "word tuple words"));
  validate_words(w);
  return w;
}

Json shuffle_to_json(const Shuffle& sh) {
  Json j;
  j["type"] = sh.type;
  j["images"] = sh.images;
  return j;
}

Shuffle shuffle_from_json(const Json& j) {
  Shuffle sh;
  sh.type = to_int_vector(member(j, "type", "shuffle"), "shuffle type");
  sh.images = to_int_vector(member(j, "images", "shuffle"), "shuffle images");
  validate_shuffle(sh);
  return sh;
}

Json qfas_to_json(const QfasEncoding& e) {
  Json j;
  j["src"] = e.src;
  j["dst"] = e.dst;
  Json entries = Json::array();
  for (const auto& row : e.entries) {
    Json jrow = Json::array();
    for (const auto& cell : row) {
      Json jcell;
      jcell["a"] = cell.a;
      jcell["sigma"] = cell.sigma.images();
      jrow.push_back(std::move(jcell));
    }
    entries.push_back(std::move(jrow));
  }
  j["entries"] = std::move(entries);
  Json src_sh = Json::array();
  for (const auto& sh : e.src_shuffles) src_sh.push_back(shuffle_to_json(sh));
  j["src_shuffles"] = std::move(src_sh);
  Json dst_sh = Json::array();
  for (const auto& sh : e.dst_shuffles) dst_sh.push_back(shuffle_to_json(sh));
  j["dst_shuffles"] = std::move(dst_sh);
  return j;
}

QfasEncoding qfas_from_json(const Json& j) {
  QfasEncoding e;
  e.src = to_int(member(j, "src", "encoding"), "encoding src");
  e.dst = to_int(member(j, "dst", "encoding"), "encoding dst");
  for (const auto& row : array_member(j, "entries", "encoding")) {
    if (!row.is_array())
      throw std::invalid_argument("encoding: entries must be an array of rows");
    std::vector<QfasEntry> cells;
    for (const auto& jcell : row) {
      QfasEntry cell;
      cell.a = to_int(member(jcell, "a", "encoding cell"), "encoding cell a");
      cell.sigma =
          Permutation(to_int_vector(member(jcell, "sigma", "encoding cell"), "encoding cell sigma"));
      cells.push_back(std::move(cell));
    }
    e.entries.push_back(std::move(cells));
  }
  for (const auto& sh : array_member(j, "src_shuffles", "encoding"))
    e.src_shuffles.push_back(shuffle_from_json(sh));
  for (const auto& sh : array_member(j, "dst_shuffles", "encoding"))
    e.dst_shuffles.push_back(shuffle_from_json(sh));
  validate_qfas(e);
  return e;
}

namespace {

Json rationals_to_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& r : v) j.push_back(format_rational(r));
  return j;
}

}  // namespace

Json bialgebra_to_json(const BialgebraData& b) {
  Json j;
  j["dim"] = b.dim;
  j["unit"] = rationals_to_json(b.unit);
  j["counit"] = rationals_to_json(b.counit);
  Json mult = Json::array();
  for (int a = 0; a < b.dim; ++a) {
    Json row = Json::array();
    for (int c = 0; c < b.dim; ++c) {
      std::vector<Rational> line(b.dim);
      const Index col = digits_to_index({a, c}, b.dim);
      for (int d = 0; d < b.dim; ++d) line[d] = b.mult.entry(d, col);
      row.push_back(rationals_to_json(line));
    }
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  Json comult = Json::array();
  for (int c = 0; c < b.dim; ++c) {
    Json row = Json::array();
    for (int a = 0; a < b.dim; ++a) {
      std::vector<Rational> line(b.dim);
      for (int d = 0; d < b.dim; ++d)
        line[d] = b.comult.entry(digits_to_index({a, d}, b.dim), c);
      row.push_back(rationals_to_json(line));
    }
    comult.push_back(std::move(row));
  }
  j["comult"] = std::move(comult);
  if (b.antipode) {
    Json ant = Json::array();
    for (int a = 0; a < b.dim; ++a) {
      std::vector<Rational> line(b.dim);
      for (int c = 0; c < b.dim; ++c) line[c] = b.antipode->entry(a, c);
      ant.push_back(rationals_to_json(line));
    }
    j["antipode"] = std::move(ant);
  }
  return j;
}

BialgebraData bialgebra_from_json(const Json& j) {
  const int dim = to_int(member(j, "dim", "bialgebra"), "bialgebra dim");
  std::string name = "custom";
  if (const Json* n = optional_member(j, "name", "bialgebra")) {
    if (!n->is_string())
      throw std::invalid_argument("bialgebra: field 'name' must be a string");
    name = n->get<std::string>();
  }
  const auto cube = [&](const char* key) {
    std::vector<std::vector<std::vector<Rational>>> out;
    for (const auto& plane : array_member(j, key, "bialgebra")) {
      if (!plane.is_array())
        throw std::invalid_argument(ctx_str("bialgebra: field '") + key +
                                    "' must be a three-level array");
      std::vector<std::vector<Rational>> rows;
      for (const auto& row : plane) rows.push_back(to_rational_vector(row, key));
      out.push_back(std::move(rows));
    }
    return out;
  };
  std::optional<std::vector<std::vector<Rational>>> antipode;
  if (const Json* a = optional_member(j, "antipode", "bialgebra")) {
    std::vector<std::vector<Rational>> rows;
    if (!a->is_array())
      throw std::invalid_argument("bialgebra: field 'antipode' must be an array");
    for (const auto& row : *a) rows.push_back(to_rational_vector(row, "antipode"));
    antipode = std::move(rows);
  }
  return make_bialgebra(std::move(name), dim,
                        to_rational_vector(member(j, "unit", "bialgebra"), "bialgebra unit"),
                        to_rational_vector(member(j, "counit", "bialgebra"), "bialgebra counit"),
                        cube("mult"), cube("comult"), antipode);
}

Json linmap_to_json(const LinMap& f) {
  Json j;
  j["dim"] = f.dim();
  j["dom_power"] = f.dom_power();
  j["cod_power"] = f.cod_power();
  j["rows"] = f.cod_size();
  j["cols"] = f.dom_size();
  Json matrix = Json::array();
  for (Index r = 0; r < f.cod_size(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < f.dom_size(); ++c) row.push_back(format_rational(f.entry(r, c)));
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  return j;
}

LinMap linmap_from_json(const Json& j) {
  LinMap f(to_int(member(j, "dim", "linear map"), "linear map dim"),
           to_int(member(j, "dom_power", "linear map"), "linear map dom_power"),
           to_int(member(j, "cod_power", "linear map"), "linear map cod_power"));
  const Json& matrix = array_member(j, "matrix", "linear map");
  if (member(j, "rows", "linear map").get<Index>() != f.cod_size() ||
      member(j, "cols", "linear map").get<Index>() != f.dom_size() ||
      matrix.size() != f.cod_size())
    throw std::invalid_argument("linear map: matrix shape does not match the powers");
  for (Index r = 0; r < f.cod_size(); ++r) {
    const Json& row = matrix[r];
    if (!row.is_array() || row.size() != f.dom_size())
      throw std::invalid_argument("linear map: matrix shape does not match the powers");
    for (Index c = 0; c < f.dom_size(); ++c) {
      const Rational v = to_rational(row[c], "linear map matrix");
      if (v != 0) f.add(r, c, v);
    }
  }
  return f;
}

std::string linmap_to_csv(const LinMap& f) {
  std::ostringstream out;
  for (Index r = 0; r < f.cod_size(); ++r) {
    for (Index c = 0; c < f.dom_size(); ++c) {
      if (c) out << ',';
      out << format_rational(f.entry(r, c));
    }
    out << '\n';
  }
  return out.str();
}

Json group_hom_to_json(const GroupHom& h) {
  Json j;
  j["source_rank"] = h.source_rank;
  j["target_rank"] = h.target_rank;
  Json images = Json::array();
  for (const auto& w : h.images) {
    Json word = Json::array();
    for (const auto& letter : w.letters) word.push_back(Json::array({letter.gen, letter.exp}));
    images.push_back(std::move(word));
  }
  j["images"] = std::move(images);
  return j;
}

GroupHom group_hom_from_json(const Json& j) {
  std::vector<GroupWord> images;
  for (const auto& word : array_member(j, "images", "group homomorphism")) {
    if (!word.is_array())
      throw std::invalid_argument("group homomorphism: each image must be an array of letters");
    std::vector<GroupLetter> letters;
    for (const auto& letter : word) {
      if (!letter.is_array() || letter.size() != 2)
        throw std::invalid_argument(
            "group homomorphism: each letter must be a [generator, exponent] pair");
      letters.push_back({to_int(letter[0], "group homomorphism letter"),
                         to_int(letter[1], "group homomorphism letter")});
    }
    images.push_back(reduce(std::move(letters)));
  }
  return GroupHom(
      to_int(member(j, "source_rank", "group homomorphism"), "group homomorphism source_rank"),
      to_int(member(j, "target_rank", "group homomorphism"), "group homomorphism target_rank"),
      std::move(images));
}

Json fp_morphism_to_json(const FPMorphism& m) {
  Json j;
  j["f"] = set_map_to_json(m.f);
  j["omega"] = m.omega;
  return j;
}

FPMorphism fp_morphism_from_json(const SetOperad& P, const Json& j) {
  FPMorphism m;
  m.f = set_map_from_json(member(j, "f", "twisted map"));
  for (const auto& x : array_member(j, "omega", "twisted map"))
    m.omega.push_back(to_long(x, "twisted map omega"));
  validate_fp(P, m);
  return m;
}

Json operad_to_json(const SetOperad& P, int total_arity_bound) {
  const int bound = std::min(total_arity_bound, P.max_arity());
  Json j;
  j["name"] = P.name();
  j["max_arity"] = P.max_arity();
  j["table_arity"] = bound;
  Json elements = Json::array();
  for (int n = 0; n <= bound; ++n) {
    Json level = Json::array();
    for (long long a = 0; a < P.size(n); ++a) level.push_back(a);
    elements.push_back(std::move(level));
  }
  j["elements"] = std::move(elements);
  j["unit"] = P.unit();

  // every substitution with outer and total arity within the bound
  Json gamma = Json::array();
  const std::function<void(int, std::vector<int>&)> arities = [&](int remaining,
                                                                  std::vector<int>& parts) {
    const int n = static_cast<int>(parts.size());
    for (long long a = 0; a < P.size(n); ++a) {
      std::vector<std::pair<int, long long>> chosen(n);
      for (int r = 0; r < n; ++r) chosen[r] = {parts[r], 0};
      while (true) {
        Json record;
        record["outer"] = Json::array({n, a});
        Json jparts = Json::array();
        for (const auto& [w, idx] : chosen) jparts.push_back(Json::array({w, idx}));
        record["parts"] = std::move(jparts);
        record["result"] = P.gamma(a, chosen);
        gamma.push_back(std::move(record));
        int r = n - 1;
        for (; r >= 0; --r) {
          if (++chosen[r].second < P.size(chosen[r].first)) break;
          chosen[r].second = 0;
        }
        if (r < 0) break;
      }
    }
    if (n < bound)
      for (int w = 0; w <= remaining; ++w) {
        parts.push_back(w);
        arities(remaining - w, parts);
        parts.pop_back();
      }
  };
  std::vector<int> parts;
  arities(bound, parts);
  j["gamma"] = std::move(gamma);

  Json action = Json::array();
  for (int n = 0; n <= bound; ++n)
    for (long long a = 0; a < P.size(n); ++a)
      for (const auto& sigma : all_permutations(n)) {
        Json record;
        record["element"] = Json::array({n, a});
        record["permutation"] = sigma.images();
        record["result"] = P.act(n, a, sigma);
        action.push_back(std::move(record));
      }
  j["action"] = std::move(action);
  return j;
}

}  // namespace qprop
