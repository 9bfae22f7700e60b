#pragma once

#include <string>

#include "json.hpp"
#include "qprop/bialg.hpp"
#include "qprop/doublecat.hpp"
#include "qprop/encode.hpp"
#include "qprop/groupword.hpp"
#include "qprop/operad.hpp"
#include "qprop/span.hpp"

namespace qprop {

// All values cross the wire as JSON with a fixed key order, so equal values
// serialize to identical bytes.  Loaders validate shape and content and
// throw std::invalid_argument with the offending field named; every loaded
// value passes through the same validating constructors as values built in
// code.  Rationals travel as strings "p" or "p/q"; integers are also
// accepted on input.
using Json = nlohmann::ordered_json;

// Serialized with two-space indentation and a trailing newline.
std::string dump_json(const Json& j);

// Reads and parses a file; throws std::invalid_argument when the file is
// missing or not valid JSON.
Json load_json_file(const std::string& path);
Json parse_json(const std::string& text);

// {"images": [2, 1]}
Json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

// {"n": 2, "m": 1, "values": [1, 1]}
Json set_map_to_json(const FinSetMap& f);
FinSetMap set_map_from_json(const Json& j);

// {"n": 4, "m": 3, "fibers": [[3], [], [2, 4, 1]]}
Json nc_map_to_json(const NcMap& f);
NcMap nc_map_from_json(const Json& j);

// {"kind": "Fas", "f1": …, "phi1": …, "f": …, "phi": …}
Json bimorphism_to_json(const Bimorphism& b);
Bimorphism bimorphism_from_json(const Json& j);

// {"kind": "Fas", "src": 1, "dst": 1, "mid": 2, "phi": …, "f": …}; spans are
// normalized on load, so files related by a middle relabeling load equal.
Json span_to_json(const Span& s);
Span span_from_json(const Json& j);

// {"rows": 2, "cols": 3, "entries": [[0, 1, 2], [1, 0, 0]]}
Json matrix_to_json(const NatMatrix& m);
NatMatrix matrix_from_json(const Json& j);

// {"m": 2, "words": [[2, 1, 1]]}
Json words_to_json(const WordTuple& w);
WordTuple words_from_json(const Json& j);

// {"type": [5, 4], "images": [1, 2, 4, 8, 9, 3, 5, 6, 7]}
Json shuffle_to_json(const Shuffle& sh);
Shuffle shuffle_from_json(const Json& j);

// {"src": …, "dst": …, "entries": [[{"a": 2, "sigma": [2, 1]}, …], …],
//  "src_shuffles": […], "dst_shuffles": […]}
Json qfas_to_json(const QfasEncoding& e);
QfasEncoding qfas_from_json(const Json& j);

// {"dim": …, "unit": […], "counit": […], "mult": [[[…]]], "comult": [[[…]]],
//  "antipode": [[…]]} — the antipode is optional; an optional "name" is
// accepted on input.  Axioms are recomputed on load.
Json bialgebra_to_json(const BialgebraData& b);
BialgebraData bialgebra_from_json(const Json& j);

// {"dim": …, "dom_power": …, "cod_power": …, "rows": …, "cols": …,
//  "matrix": [[…]]} with the dense row-major matrix as rational strings.
Json linmap_to_json(const LinMap& f);
LinMap linmap_from_json(const Json& j);

// Row-major CSV of the same matrix, one row per line.
std::string linmap_to_csv(const LinMap& f);

// {"source_rank": 2, "target_rank": 3,
//  "images": [[[1, -1], [2, 1], [1, 1]], …]} — one letter list per source
// generator, letters as [generator, exponent] with exponent ±1.
Json group_hom_to_json(const GroupHom& h);
GroupHom group_hom_from_json(const Json& j);

// {"f": …, "omega": [element indices]}; the loader checks the twists
// against the given operad.
Json fp_morphism_to_json(const FPMorphism& m);
FPMorphism fp_morphism_from_json(const SetOperad& P, const Json& j);

// A finite excerpt of the operad: element index lists per arity and the
// substitution and action tables for all combinations of total arity at
// most the bound.
Json operad_to_json(const SetOperad& P, int total_arity_bound);

}  // namespace qprop
