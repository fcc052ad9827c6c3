#ifndef WILDFORMS_ANALYZE_HPP
#define WILDFORMS_ANALYZE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wildforms/apolar.hpp"
#include "wildforms/families.hpp"

namespace wildforms {

struct AnalyzeOptions {
  bool exact = false;
  std::uint64_t seed = 0;
  bool certify_family = false;   // construct + verify the known decomposition
  bool saturation_check = true;  // linear forms in sat(Ann(F)_{<= d-1})
};

struct AnalysisReport {
  std::string name;        // catalog name when recognized, else empty
  std::string input_echo;  // canonical printing of the form
  int nvars = 0;
  int degree = 0;
  bool concise = false;
  std::vector<int> hf;                  // = catalecticant ranks, k = 0..d
  int lower_bound = 0;
  HessianStatus hessian;
  SlpResult slp;
  std::optional<bool> saturation_has_linear_form;
  WildnessVerdict verdict;
  std::uint64_t seed = 0;
  bool exact_mode = false;
  double elapsed_seconds = 0.0;
};

AnalysisReport analyze_form(const NamedForm& input, const AnalyzeOptions& opts);

// Sorted keys, schema tag, no timing (seeded runs are byte-identical).
std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace wildforms

#endif
