// JSON (de)serialization for the public value types plus the small text
// formats used on the command line: rationals "n/d", prime lists "2,3,7",
// and plain-text edge lists.
#pragma once

#include "sunit/analyze.hpp"
#include "sunit/diophantine.hpp"
#include "sunit/graphcore.hpp"
#include "sunit/sintring.hpp"
#include "sunit/synthesis.hpp"
#include "sunit/unitgraph.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace sunit {

// Ordered so that emitted documents keep the documented field order and
// identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[i,j], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"primes": [...], "points": ["n/d", ...], "graph": ..., "map": [...]}
// with graph and map optional. Primes are emitted as numbers when they fit
// in 64 bits and as decimal strings beyond that; both are accepted back.
Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j);

// {"dim": n, "coords": ["0110", ...]}
Json embedding_to_json(const CubeEmbedding& e);
CubeEmbedding embedding_from_json(const Json& j);

// {"status": "...", "citations": [...], "notes": "..."}
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

// [{"values": ["n/d", ...], "degenerate": bool}, ...]
Json solutions_to_json(const std::vector<UnitSolution>& sols);

// {"classes": n, "representatives": [["0","1"], ...]}
Json census_to_json(const CensusResult& census);

// "n/d" or "n", base 10, optional leading minus on the numerator.
BigRat parse_rational(const std::string& text);

// Comma-separated primes, e.g. "2,3,7".
PrimeSet parse_primes(const std::string& csv);

// Comma-separated rationals decomposed over s.
std::vector<SInteger> parse_points(const std::string& csv, const PrimeSet& s);

// Plain-text graph: one "i j" edge per line; a line holding a single
// integer pins the vertex count (otherwise max endpoint + 1); '#' starts a
// comment line.
Graph read_graph_text(std::istream& in);

// Sniffs the first non-space byte: '{' means JSON, anything else the text
// edge list.
Graph read_graph_file(const std::string& path);

} // namespace sunit
