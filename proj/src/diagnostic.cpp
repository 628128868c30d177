#include "opetope/diagnostic.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

namespace opetope {

namespace {

constexpr std::pair<DiagCode, std::string_view> kNames[] = {
    {DiagCode::DuplicateId, "DuplicateId"},
    {DiagCode::DanglingId, "DanglingId"},
    {DiagCode::FacetDimensionMismatch, "FacetDimensionMismatch"},
    {DiagCode::NoBottom, "NoBottom"},
    {DiagCode::MultipleBottoms, "MultipleBottoms"},
    {DiagCode::BottomShape, "BottomShape"},
    {DiagCode::GammaNotSingleton, "GammaNotSingleton"},
    {DiagCode::LoopAxiomViolated, "LoopAxiomViolated"},
    {DiagCode::ZeroCellShape, "ZeroCellShape"},
    {DiagCode::LocalOrderMissing, "LocalOrderMissing"},
    {DiagCode::LocalOrderNotTotal, "LocalOrderNotTotal"},
    {DiagCode::LocalOrderUnexpected, "LocalOrderUnexpected"},
    {DiagCode::NoGreatestElement, "NoGreatestElement"},
    {DiagCode::LoopWithoutPlusCoface, "LoopWithoutPlusCoface"},
    {DiagCode::ThinnessMissingCompletion, "ThinnessMissingCompletion"},
    {DiagCode::ThinnessNonUnique, "ThinnessNonUnique"},
    {DiagCode::SignRuleViolated, "SignRuleViolated"},
    {DiagCode::LoopChainNoCompletion, "LoopChainNoCompletion"},
    {DiagCode::AcyclicityCycle, "AcyclicityCycle"},
    {DiagCode::MultipleRoots, "MultipleRoots"},
    {DiagCode::NoRoot, "NoRoot"},
    {DiagCode::RootMismatch, "RootMismatch"},
    {DiagCode::UnreachableEdge, "UnreachableEdge"},
    {DiagCode::NodeWithoutTarget, "NodeWithoutTarget"},
    {DiagCode::EdgeMultipleSources, "EdgeMultipleSources"},
    {DiagCode::Cycle, "Cycle"},
    {DiagCode::BadSubdivision, "BadSubdivision"},
    {DiagCode::SigmaNotBijective, "SigmaNotBijective"},
    {DiagCode::KernelRuleViolated, "KernelRuleViolated"},
    {DiagCode::NonExactConstellation, "NonExactConstellation"},
    {DiagCode::BadBaseTree, "BadBaseTree"},
    {DiagCode::NonLinearT2, "NonLinearT2"},
    {DiagCode::ArityMismatch, "ArityMismatch"},
    {DiagCode::IdCollision, "IdCollision"},
};

}  // namespace

std::string_view code_name(DiagCode code) {
  for (const auto& [c, n] : kNames)
    if (c == code) return n;
  return "Unknown";
}

std::optional<DiagCode> code_from_name(std::string_view name) {
  for (const auto& [c, n] : kNames)
    if (n == name) return c;
  return std::nullopt;
}

void normalize(std::vector<Diagnostic>& diags) {
  std::sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    auto an = code_name(a.code), bn = code_name(b.code);
    if (an != bn) return an < bn;
    if (a.cells != b.cells) return a.cells < b.cells;
    return a.message < b.message;
  });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
}

std::string to_json_line(const Diagnostic& d) {
  nlohmann::json j;
  j["code"] = std::string(code_name(d.code));
  j["cells"] = d.cells;
  j["axiom"] = d.axiom;
  j["message"] = d.message;
  return j.dump();
}

}  // namespace opetope
