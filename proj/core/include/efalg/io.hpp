#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efalg/algebra.hpp"
#include "efalg/structure.hpp"

namespace efalg {

/// Parsed algebra file before axiom checking.
///
///   # comment
///   efa 1            (or "gea 1" for a generalized effect algebra, no "one")
///   order N
///   zero I
///   one J
///   name I LABEL
///   sum I J K
struct AlgebraDocument {
  bool generalized = false;
  PartialOpTable table;
  ElementId zero = 0;
  std::optional<ElementId> one;
  std::vector<std::string> names;  // empty when no name lines were given
};

/// Throws InputError("line N: ...") on malformed text.
AlgebraDocument parse_document(std::string_view text);

/// Parses and validates; throws InputError or AxiomError.
FiniteEffectAlgebra parse_algebra(std::string_view text);
FiniteGeneralizedEffectAlgebra parse_generalized(std::string_view text);

FiniteEffectAlgebra to_effect_algebra(const AlgebraDocument& doc);

/// Canonical text: header, names in id order, sums sorted by (I, J) with I <= J.
std::string serialize(const FiniteEffectAlgebra& e);
std::string serialize(const FiniteGeneralizedEffectAlgebra& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

inline constexpr std::string_view kAnalyzeSchema = "efalg-analyze/1";

/// The analyze report as pretty-printed JSON with a trailing newline.
std::string analyze_json(const FiniteEffectAlgebra& e, const StructureReport& report);

/// The analyze report as a human-readable summary.
std::string analyze_text(const FiniteEffectAlgebra& e, const StructureReport& report);

}  // namespace efalg
