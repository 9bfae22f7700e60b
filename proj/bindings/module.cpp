// Python bindings: a thin JSON-text interface over the core library.
// Structured arguments and results are JSON strings in the same schemas the
// command-line tool reads and writes; the qprop package wraps these in
// dict-based conveniences.  Exceptions surface as ValueError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "qprop/eval.hpp"
#include "qprop/json_io.hpp"
#include "qprop/suites.hpp"

namespace py = pybind11;

namespace {

using namespace qprop;

// Builtin name, else inline JSON for the structure constants.
BialgebraData algebra_arg(const std::string& spec) {
  try {
    return builtin(spec);
  } catch (const std::invalid_argument&) {
  }
  try {
    return bialgebra_from_json(parse_json(spec));
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument("algebra '" + spec + "': not a builtin name, and " + err.what());
  }
}

Span span_arg(const Json& j, DoubleKind kind) {
  const Span s = span_from_json(j);
  if (s.kind != kind)
    throw std::invalid_argument("span of kind " + kind_name(s.kind) + " given, expected " +
                                kind_name(kind));
  return s;
}

std::string compose_text(const std::string& cat, const std::string& a_text,
                         const std::string& b_text, const std::string& operad_name) {
  const Json a = parse_json(a_text);
  const Json b = parse_json(b_text);
  Json out;
  if (cat == "fas") {
    out = nc_map_to_json(compose_nc(nc_map_from_json(b), nc_map_from_json(a)));
  } else if (cat == "f") {
    out = set_map_to_json(compose_set(set_map_from_json(b), set_map_from_json(a)));
  } else if (cat == "q-fas" || cat == "q-f" || cat == "q-fas1" || cat == "q-fas2") {
    const DoubleKind kind = cat == "q-fas"    ? DoubleKind::Fas
                            : cat == "q-f"    ? DoubleKind::F
                            : cat == "q-fas1" ? DoubleKind::Fas1
                                              : DoubleKind::Fas2;
    out = span_to_json(compose_span(span_arg(b, kind), span_arg(a, kind)));
  } else if (cat == "mon") {
    const Span first = mon_span_of_words(words_from_json(a));
    const Span second = mon_span_of_words(words_from_json(b));
    out = words_to_json(mon_words_of_span(compose_span(second, first)));
  } else if (cat == "fp") {
    // enough arities for both inputs and the composite
    int needed = 1;
    for (const Json* j : {&a, &b}) {
      if (!j->is_object() || !j->contains("f"))
        throw std::invalid_argument("twisted map: missing field 'f'");
      needed = std::max(needed, set_map_from_json(j->at("f")).n);
    }
    if (operad_name != "as" && operad_name != "com")
      throw std::invalid_argument("operad must be 'as' or 'com'");
    const SetOperad P = operad_name == "com" ? com_operad(needed) : as_operad(needed);
    out = fp_morphism_to_json(compose_fp(P, fp_morphism_from_json(P, b),
                                         fp_morphism_from_json(P, a)));
  } else {
    throw std::invalid_argument("unknown category '" + cat + "'");
  }
  return dump_json(out);
}

std::string encode_text(const std::string& scheme, const std::string& input) {
  const Json in = parse_json(input);
  if (scheme == "matrix") return dump_json(matrix_to_json(qf_to_matrix(span_from_json(in))));
  if (scheme == "words") return dump_json(words_to_json(mon_words_of_span(span_from_json(in))));
  if (scheme == "qfas") return dump_json(qfas_to_json(qfas_encode(span_from_json(in))));
  if (scheme == "shuffle") {
    if (!in.is_object() || !in.contains("m") || !in.contains("word"))
      throw std::invalid_argument("shuffle input must be {\"m\": …, \"word\": […]}");
    std::vector<int> word;
    for (const auto& x : in.at("word")) word.push_back(x.get<int>());
    return dump_json(shuffle_to_json(word_to_shuffle(word, in.at("m").get<int>())));
  }
  throw std::invalid_argument("unknown scheme '" + scheme + "'");
}

std::string decode_text(const std::string& scheme, const std::string& input) {
  const Json in = parse_json(input);
  if (scheme == "matrix") return dump_json(span_to_json(qf_from_matrix(matrix_from_json(in))));
  if (scheme == "words") return dump_json(span_to_json(mon_span_of_words(words_from_json(in))));
  if (scheme == "qfas") return dump_json(span_to_json(qfas_decode(qfas_from_json(in))));
  if (scheme == "shuffle") {
    const Shuffle sh = shuffle_from_json(in);
    Json out;
    out["m"] = static_cast<int>(sh.type.size());
    out["word"] = shuffle_to_word(sh);
    return dump_json(out);
  }
  throw std::invalid_argument("unknown scheme '" + scheme + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spans of finite sets, power operations, and bialgebra evaluation";

  m.def("builtin_names", &qprop::builtin_names, "Names of the built-in structures");

  m.def(
      "bialgebra",
      [](const std::string& algebra) { return dump_json(bialgebra_to_json(algebra_arg(algebra))); },
      py::arg("algebra"), "Structure constants as JSON text");

  m.def(
      "axioms",
      [](const std::string& algebra) {
        const AxiomReport r = algebra_arg(algebra).axioms;
        py::dict d;
        d["associative"] = r.associative;
        d["unital"] = r.unital;
        d["coassociative"] = r.coassociative;
        d["counital"] = r.counital;
        d["comult_multiplicative"] = r.comult_multiplicative;
        d["counit_multiplicative"] = r.counit_multiplicative;
        d["comult_preserves_unit"] = r.comult_preserves_unit;
        d["counit_preserves_unit"] = r.counit_preserves_unit;
        d["commutative"] = r.commutative;
        d["cocommutative"] = r.cocommutative;
        d["antipode_present"] = r.antipode_present;
        d["antipode_valid"] = r.antipode_valid;
        d["algebra"] = r.algebra();
        d["coalgebra"] = r.coalgebra();
        d["bialgebra"] = r.bialgebra();
        return d;
      },
      py::arg("algebra"), "Verified axiom flags of an algebra");

  m.def("compose", &compose_text, py::arg("cat"), py::arg("a"), py::arg("b"),
        py::arg("operad") = "as",
        "Compose two morphisms given as JSON text (the second after the first)");

  m.def(
      "phi",
      [](const std::string& sigma, const std::string& tau) {
        return format_one_line(phi_compose(parse_one_line(sigma), parse_one_line(tau)));
      },
      py::arg("sigma"), py::arg("tau"),
      "Composition permutation of two fold maps, one-line notation");

  m.def(
      "psi",
      [](const std::string& algebra, int n, const std::string& sigma_text) {
        const BialgebraData b = algebra_arg(algebra);
        const Permutation sigma =
            sigma_text.empty() ? Permutation::identity(n) : parse_one_line(sigma_text);
        if (sigma.degree() != n)
          throw std::invalid_argument("sigma must be a permutation of n letters");
        return dump_json(linmap_to_json(psi(n, sigma, b)));
      },
      py::arg("algebra"), py::arg("n"), py::arg("sigma") = std::string(),
      "Matrix of a power operation as JSON text");

  m.def(
      "eval_span",
      [](const std::string& algebra, const std::string& span) {
        return dump_json(linmap_to_json(eval_span(span_from_json(parse_json(span)),
                                                  algebra_arg(algebra))));
      },
      py::arg("algebra"), py::arg("span"),
      "Evaluate a span on a structure; returns the matrix as JSON text");

  m.def("encode", &encode_text, py::arg("scheme"), py::arg("input"),
        "Encode a span (schemes: matrix, words, qfas) or a word (shuffle)");

  m.def("decode", &decode_text, py::arg("scheme"), py::arg("input"),
        "Decode an encoding back to a span (or word)");

  m.def(
      "check",
      [](const std::string& suite) {
        const SuiteResult r = run_suite(suite);
        return py::make_tuple(r.name, r.passed, r.total, r.pass);
      },
      py::arg("suite"), "Run a verification suite; returns (name, passed, total, ok)");

  m.def(
      "acceptance",
      [](int criterion) {
        const CriterionResult r = run_criterion(criterion);
        return py::make_tuple(r.number, r.title, r.passed, r.total, r.pass());
      },
      py::arg("criterion"),
      "Run one acceptance criterion; returns (number, title, passed, total, ok)");
}
