#pragma once

#include <optional>
#include <string>

#include "toricgraph/graph.hpp"
#include "toricgraph/groebner.hpp"

namespace toricgraph {

// On-disk cache for reduced toric bases, keyed by graph + order + algorithm
// version.  Files use the TGGB binary format (see docs/cache-format.md):
// magic "TGGB", format and algorithm versions, variable names, generators
// as exponent-vector pairs; integers little-endian with explicit widths.
// A loaded basis is accepted only after it passes the s-polynomial
// certificate against the requesting context; anything else is recomputed.

// 64-bit FNV-1a over canonical graph JSON, order description and algorithm
// version, in lowercase hex.
std::string cache_key(const Graph& g, const MonomialOrder& order);

// nullopt on: missing file, malformed file, wrong key, mismatched
// variables, or certificate failure.
std::optional<GroebnerBasis> cache_load(const std::string& dir, const std::string& key,
                                        const ContextPtr& ctx);

void cache_store(const std::string& dir, const std::string& key, const GroebnerBasis& gb);

// Cache directory from the environment (TORICGRAPH_CACHE), empty if unset.
std::string default_cache_dir();

}  // namespace toricgraph
