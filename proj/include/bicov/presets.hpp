#pragma once

// Differential brackets of the appendix families, given as term lists on top
// of the r-term and converted to parameter assignments of the general family.

#include <string>
#include <string_view>
#include <vector>

#include "bicov/bracket.hpp"

namespace bicov {

struct AppendixTerm {
  std::string label;
  FormTensor<MPoly> value;  // on spaces {1, 2}
};

/// A1i, A1ii, A1iii, A2, A3.
const std::vector<std::string>& preset_tags();

/// Term list of a preset (the r-term is implied). Throws std::invalid_argument for unknown tags.
std::vector<AppendixTerm> appendix_terms(const GroupData& g, std::string_view tag);

/// Sum of the term list.
FormTensor<MPoly> appendix_expression(const GroupData& g, std::string_view tag);

struct AppendixPreset {
  std::string tag;
  BracketParams<MPoly> params;
  std::vector<std::string> free_symbols;
  TraceShape expected_shape = TraceShape::none;
};

/// Parameter assignment reproducing the term list. Throws std::logic_error if
/// the term list is not in the span of the family.
AppendixPreset appendix_preset(const BracketBasis& basis, std::string_view tag);

/// combine(params) without r equals the expanded term list, entry by entry.
bool preset_expansion_matches(const BracketBasis& basis, const AppendixPreset& preset);

/// For A3: a6, a7 eliminated so that mu5 = -mu6 = a4 (the form iii constraint).
BracketParams<MPoly> impose_form_iii(const GroupData& g, const BracketParams<MPoly>& p);

/// Classification of {Omega, tr Omega} of a built preset.
TraceShape trace_bracket_shape(const BracketBasis& basis, const AppendixPreset& preset);

/// Preset with its free symbols replaced by seeded random rationals.
BracketParams<Rational> specialize_preset(const AppendixPreset& preset, std::uint64_t seed);

}  // namespace bicov
