#pragma once

#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace opetope {

using CellId = std::string;

enum class DiagCode {
  // many-to-one poset shape
  DuplicateId,
  DanglingId,
  FacetDimensionMismatch,
  NoBottom,
  MultipleBottoms,
  BottomShape,
  GammaNotSingleton,
  LoopAxiomViolated,
  ZeroCellShape,
  LocalOrderMissing,
  LocalOrderNotTotal,
  LocalOrderUnexpected,
  // dendritic face complex axioms
  NoGreatestElement,
  LoopWithoutPlusCoface,
  ThinnessMissingCompletion,
  ThinnessNonUnique,
  SignRuleViolated,
  LoopChainNoCompletion,
  AcyclicityCycle,
  // trees and zoom complexes
  MultipleRoots,
  NoRoot,
  RootMismatch,
  UnreachableEdge,
  NodeWithoutTarget,
  EdgeMultipleSources,
  Cycle,
  BadSubdivision,
  SigmaNotBijective,
  KernelRuleViolated,
  NonExactConstellation,
  BadBaseTree,
  NonLinearT2,
  ArityMismatch,
  IdCollision,
};

std::string_view code_name(DiagCode code);
std::optional<DiagCode> code_from_name(std::string_view name);

struct Diagnostic {
  DiagCode code;
  std::vector<CellId> cells;
  std::string axiom;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Sorts by (code name, cells, message) and drops exact duplicates.
void normalize(std::vector<Diagnostic>& diags);

std::string to_json_line(const Diagnostic& d);

// Result of a validating constructor: either a value or the full list of
// violations that prevented building it.
template <class T>
struct Checked {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// Raised when a construction that is total on valid input meets a state the
// validators should have excluded.
struct InternalError : std::exception {
  std::string what_;
  explicit InternalError(std::string w) : what_(std::move(w)) {}
  const char* what() const noexcept override { return what_.c_str(); }
};

}  // namespace opetope
