#pragma once

#include "liefan/branching.hpp"

#include <string>
#include <vector>

namespace liefan {

// JSON wire formats. Rationals are decimal fraction strings ("p/q", reduced,
// "p" when integral); never floats. Output is deterministic: fixed key
// order, terms sorted grade-major descending.

std::string weight_to_json(const Weight& w);
Weight weight_from_json(const std::string& text);

/// {"series":"A","rank":2,"twist":1}; twist omitted or 0 means finite.
/// Finite descriptors may carry an explicit realization:
/// "simple_roots": [["p/q",...],...] and optional "gram" matrix.
AlgebraSpec algebra_from_json(const std::string& text);
std::string algebra_to_json(const AlgebraSpec& spec);

/// {"ambient":{...},"sub":{...},"projection":[["p/q",...],...],
///  "level_scale":"p/q","preset":"B1-in-A2"}; preset overrides the matrix.
InjectionSpec injection_from_json(const std::string& text);

/// Singular element document: algebra descriptor, highest weight, cutoff and
/// the signed terms. Parse and serialize round-trip byte-identically.
std::string singular_to_json(const AlgebraSpec& spec, const SingularElement& element);
struct SingularDocument {
    AlgebraSpec spec;
    SingularElement element;
};
SingularDocument singular_from_json(const std::string& text);

/// {"classes":[{"highest_weight":{...},"series":[[0,1],[4,1],...]}]} for
/// affine subalgebras; plain dominant coefficient list otherwise.
std::string branching_to_json(const BranchingResult& result);

std::string weight_multiplicities_to_json(const AlgebraSpec& spec, const AnomalousTable& table);

std::string fan_to_json(const Fan& fan);

} // namespace liefan
