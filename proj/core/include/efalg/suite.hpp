#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "efalg/algebra.hpp"

namespace efalg {

struct NamedAlgebra {
  std::string name;
  FiniteEffectAlgebra algebra;
};

/// The named catalog followed by every enumerated algebra of order 2..max_order
/// (named "enumN_i" in canonical order).
std::vector<NamedAlgebra> suite_universe(std::size_t max_order, std::size_t jobs = 1);

struct AnchorResult {
  std::string anchor;
  std::string statement;
  std::size_t algebras = 0;  // algebras on which the hypotheses held
  std::size_t checks = 0;    // individual instances evaluated
  std::size_t failures = 0;
  std::string first_failure;  // "algebra: witness", empty when none
};

struct SuiteReport {
  std::vector<AnchorResult> anchors;
  std::size_t algebras = 0;
  std::size_t qualifying = 0;
  /// Meager pairs of qualifying algebras whose candidate set for S has no
  /// maximum. Informational.
  std::size_t s_without_top = 0;
  std::vector<std::string> s_without_top_examples;

  bool ok() const;
};

/// Runs every property check on every algebra. The report does not depend
/// on the worker count.
SuiteReport run_suite(const std::vector<NamedAlgebra>& universe, std::size_t jobs = 1);

/// Fixed-width table, one line per anchor, followed by a summary line.
std::string format_suite(const SuiteReport& report);

}  // namespace efalg
