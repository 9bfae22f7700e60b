// Command-line surface: compose morphisms from JSON files, compute the
// composition permutation and power operations, evaluate spans on builtin
// or file-backed structures, convert between encodings, and run the
// verification suites.  Exit codes: 0 success, 1 verification failure,
// 2 malformed input.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qprop/eval.hpp"
#include "qprop/json_io.hpp"
#include "qprop/suites.hpp"

namespace {

using namespace qprop;

BialgebraData algebra_arg(const std::string& spec) {
  try {
    return builtin(spec);
  } catch (const std::invalid_argument&) {
  }
  try {
    return bialgebra_from_json(load_json_file(spec));
  } catch (const std::invalid_argument& err) {
    throw std::invalid_argument("algebra '" + spec + "': not a builtin name, and " +
                                err.what());
  }
}

Span span_arg(const std::string& path, DoubleKind kind) {
  const Span s = span_from_json(load_json_file(path));
  if (s.kind != kind)
    throw std::invalid_argument("file '" + path + "' holds a span of kind " +
                                kind_name(s.kind) + ", expected " + kind_name(kind));
  return s;
}

int run_compose(const std::string& cat, const std::string& operad_name,
                const std::string& a_path, const std::string& b_path) {
  const Json a = load_json_file(a_path);
  const Json b = load_json_file(b_path);
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
    const Span first = span_arg(a_path, kind);
    const Span second = span_arg(b_path, kind);
    out = span_to_json(compose_span(second, first));
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
      throw std::invalid_argument("--operad must be 'as' or 'com'");
    const SetOperad P = operad_name == "com" ? com_operad(needed) : as_operad(needed);
    const FPMorphism first = fp_morphism_from_json(P, a);
    const FPMorphism second = fp_morphism_from_json(P, b);
    out = fp_morphism_to_json(compose_fp(P, second, first));
  } else {
    throw std::invalid_argument("unknown category '" + cat + "'");
  }
  std::cout << dump_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spans of finite sets, power operations, and bialgebra evaluation"};
  app.require_subcommand(1);

  std::string cat, operad_name = "as", a_path, b_path;
  CLI::App* compose_cmd = app.add_subcommand("compose", "Compose two morphisms (B after A)");
  compose_cmd->add_option("--cat", cat, "Category: fas|f|q-fas|q-f|q-fas1|q-fas2|mon|fp")
      ->required();
  compose_cmd->add_option("--operad", operad_name, "Operad for --cat fp: as|com");
  compose_cmd->add_option("A", a_path, "First morphism (applied first)")->required();
  compose_cmd->add_option("B", b_path, "Second morphism")->required();

  std::string sigma_text, tau_text;
  CLI::App* phi_cmd = app.add_subcommand("phi", "Composition permutation of two fold maps");
  phi_cmd->add_option("--sigma", sigma_text, "One-line permutation")->required();
  phi_cmd->add_option("--tau", tau_text, "One-line permutation")->required();

  std::string algebra_spec, psi_sigma;
  int psi_n = 0;
  CLI::App* psi_cmd = app.add_subcommand("psi", "Matrix of a power operation");
  psi_cmd->add_option("--algebra", algebra_spec, "Builtin name or JSON file")->required();
  psi_cmd->add_option("-n", psi_n, "Number of factors")->required();
  psi_cmd->add_option("--sigma", psi_sigma, "One-line permutation (default: identity)");

  std::string eval_algebra, eval_span_path, eval_format = "json";
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a span on a structure");
  eval_cmd->add_option("--algebra", eval_algebra, "Builtin name or JSON file")->required();
  eval_cmd->add_option("span", eval_span_path, "Span JSON file")->required();
  eval_cmd->add_option("--format", eval_format, "Output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string scheme, codec_input;
  CLI::App* encode_cmd = app.add_subcommand("encode", "Encode a span (or word)");
  encode_cmd->add_option("--scheme", scheme, "matrix|words|shuffle|qfas")->required();
  encode_cmd->add_option("input", codec_input, "Input JSON file")->required();
  CLI::App* decode_cmd = app.add_subcommand("decode", "Decode an encoding");
  decode_cmd->add_option("--scheme", scheme, "matrix|words|shuffle|qfas")->required();
  decode_cmd->add_option("input", codec_input, "Input JSON file")->required();

  std::string suite;
  CLI::App* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("--suite", suite, "phi|psi|mackey|encodings|xi|operad|axioms|all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  using namespace qprop;
  try {
    if (*compose_cmd) return run_compose(cat, operad_name, a_path, b_path);

    if (*phi_cmd) {
      std::cout << format_one_line(
                       phi_compose(parse_one_line(sigma_text), parse_one_line(tau_text)))
                << '\n';
      return 0;
    }

    if (*psi_cmd) {
      if (psi_n < 0) throw std::invalid_argument("-n must be nonnegative");
      const BialgebraData b = algebra_arg(algebra_spec);
      const Permutation sigma =
          psi_sigma.empty() ? Permutation::identity(psi_n) : parse_one_line(psi_sigma);
      if (sigma.degree() != psi_n)
        throw std::invalid_argument("--sigma must be a permutation of -n letters");
      const LinMap m = psi(psi_n, sigma, b);
      for (Index r = 0; r < m.cod_size(); ++r) {
        for (Index c = 0; c < m.dom_size(); ++c) {
          if (c) std::cout << ' ';
          std::cout << format_rational(m.entry(r, c));
        }
        std::cout << '\n';
      }
      return 0;
    }

    if (*eval_cmd) {
      const BialgebraData b = algebra_arg(eval_algebra);
      const Span s = span_from_json(load_json_file(eval_span_path));
      const LinMap result = eval_span(s, b);
      if (eval_format == "csv")
        std::cout << linmap_to_csv(result);
      else
        std::cout << dump_json(linmap_to_json(result));
      return 0;
    }

    if (*encode_cmd) {
      const Json in = load_json_file(codec_input);
      if (scheme == "matrix")
        std::cout << dump_json(matrix_to_json(qf_to_matrix(span_from_json(in))));
      else if (scheme == "words")
        std::cout << dump_json(words_to_json(mon_words_of_span(span_from_json(in))));
      else if (scheme == "qfas")
        std::cout << dump_json(qfas_to_json(qfas_encode(span_from_json(in))));
      else if (scheme == "shuffle") {
        if (!in.is_object() || !in.contains("m") || !in.contains("word"))
          throw std::invalid_argument("shuffle input must be {\"m\": …, \"word\": […]}");
        std::vector<int> word;
        for (const auto& x : in.at("word")) word.push_back(x.get<int>());
        std::cout << dump_json(shuffle_to_json(word_to_shuffle(word, in.at("m").get<int>())));
      } else
        throw std::invalid_argument("unknown scheme '" + scheme + "'");
      return 0;
    }

    if (*decode_cmd) {
      const Json in = load_json_file(codec_input);
      if (scheme == "matrix")
        std::cout << dump_json(span_to_json(qf_from_matrix(matrix_from_json(in))));
      else if (scheme == "words")
        std::cout << dump_json(span_to_json(mon_span_of_words(words_from_json(in))));
      else if (scheme == "qfas")
        std::cout << dump_json(span_to_json(qfas_decode(qfas_from_json(in))));
      else if (scheme == "shuffle") {
        const Shuffle sh = shuffle_from_json(in);
        Json out;
        out["m"] = static_cast<int>(sh.type.size());
        out["word"] = shuffle_to_word(sh);
        std::cout << dump_json(out);
      } else
        throw std::invalid_argument("unknown scheme '" + scheme + "'");
      return 0;
    }

    if (*check_cmd) {
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names.push_back(suite);
      bool all = true;
      for (const auto& name : names) {
        const SuiteResult r = run_suite(name);  // throws on an unknown name
        std::cout << suite_report_line(r) << '\n';
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
