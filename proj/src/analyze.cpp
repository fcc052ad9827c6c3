#include "wildforms/analyze.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "wildforms/parser.hpp"

namespace wildforms {

namespace {

std::optional<BorderDecomposition> family_decomposition(const std::string& name) {
  if (name.empty()) return std::nullopt;
  try {
    if (name == "Perazzo") return fn_decomposition(4);
    if (name[0] == 'G') return gd_decomposition(std::stoi(name.substr(1)));
    if (name[0] == 'F') return fn_decomposition(std::stoi(name.substr(1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

AnalysisReport analyze_form(const NamedForm& input, const AnalyzeOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  const Form& f = input.form;
  AnalysisReport r;
  r.name = input.name;
  r.input_echo = print_poly(f.poly(), input.vars);
  r.nvars = f.nvars();
  r.degree = f.degree();
  r.seed = opts.seed;
  r.exact_mode = opts.exact;

  HilbertFunctionTable hf = hilbert_function(f);
  r.hf = hf.values;
  r.lower_bound = hf.max_value();
  r.concise = r.hf.size() > 1 && r.hf[1] == r.nvars;

  HessianOptions hopts{.exact = opts.exact, .seed = opts.seed};
  r.hessian = hessian_vanishes(f, hopts);
  r.slp = has_slp(f, hopts);

  if (opts.saturation_check) {
    std::vector<Polynomial> gens;
    for (int k = 1; k <= f.degree() - 1; ++k)
      for (auto& p : annihilator_component(f, k)) gens.push_back(std::move(p));
    GradedIdeal trunc(input.vars, std::move(gens));
    r.saturation_has_linear_form = contains_linear_form(saturation(trunc));
  }

  MinimalBorderRankCertificate cert = MinimalBorderRankCertificate::assumed();
  if (opts.certify_family) {
    if (auto dec = family_decomposition(input.name))
      cert = MinimalBorderRankCertificate::verified(std::move(*dec));
  }
  r.verdict = classify_wild(f, cert, hopts);

  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

nlohmann::json hessian_json(const HessianStatus& h) {
  nlohmann::json j;
  j["vanishes"] = h.vanishes;
  j["mode"] = h.exact ? "exact" : "probabilistic";
  j["matrix_size"] = h.matrix_size;
  if (h.log2_failure_bound) j["log2_failure_bound"] = *h.log2_failure_bound;
  if (h.witness_point) {
    nlohmann::json pt = nlohmann::json::array();
    for (const auto& c : *h.witness_point) pt.push_back(to_string(c));
    j["witness_point"] = pt;
  }
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "analysis";
  if (!r.name.empty()) j["name"] = r.name;
  j["input"] = r.input_echo;
  j["nvars"] = r.nvars;
  j["degree"] = r.degree;
  j["concise"] = r.concise;
  j["hilbert_function"] = r.hf;
  j["catalecticant_ranks"] = r.hf;
  j["rank_lower_bound"] = r.lower_bound;
  j["hessian"] = hessian_json(r.hessian);
  nlohmann::json slp = nlohmann::json::array();
  for (std::size_t k = 0; k < r.slp.by_k.size(); ++k) {
    nlohmann::json one = hessian_json(r.slp.by_k[k]);
    one["k"] = static_cast<int>(k) + 1;
    slp.push_back(one);
  }
  j["higher_hessians"] = slp;
  j["slp"] = r.slp.has_slp;
  if (r.saturation_has_linear_form)
    j["saturation_contains_linear_form"] = *r.saturation_has_linear_form;
  nlohmann::json v;
  v["verdict"] = to_string(r.verdict.kind);
  if (r.verdict.reason) v["reason"] = to_string(*r.verdict.reason);
  if (!r.verdict.certificate.empty()) v["certificate"] = r.verdict.certificate;
  if (!r.verdict.rank_conclusions.empty())
    v["rank_conclusions"] = r.verdict.rank_conclusions;
  j["wildness"] = v;
  j["seed"] = r.seed;
  j["exact"] = r.exact_mode;
  return j.dump(2);
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  if (!r.name.empty()) os << "name: " << r.name << "\n";
  os << "input: " << r.input_echo << "\n";
  os << "variables: " << r.nvars << ", degree: " << r.degree << "\n";
  os << "concise: " << (r.concise ? "yes" : "no") << "\n";
  os << "hilbert function (= catalecticant ranks):";
  for (int v : r.hf) os << " " << v;
  os << "\nrank lower bound: " << r.lower_bound << "\n";
  os << "hessian: " << (r.hessian.vanishes ? "vanishes" : "nonzero");
  if (r.hessian.exact) {
    os << " (exact)";
  } else if (r.hessian.vanishes && r.hessian.log2_failure_bound) {
    os << " (probabilistic, failure <= 2^" << *r.hessian.log2_failure_bound << ")";
  } else {
    os << " (witness point found)";
  }
  os << "\n";
  for (std::size_t k = 0; k < r.slp.by_k.size(); ++k)
    os << "hess^" << (k + 1) << ": "
       << (r.slp.by_k[k].vanishes ? "vanishes" : "nonzero") << "\n";
  os << "slp: " << (r.slp.has_slp ? "holds" : "fails") << "\n";
  if (r.saturation_has_linear_form)
    os << "saturation of Ann_{<=d-1} contains a linear form: "
       << (*r.saturation_has_linear_form ? "yes" : "no") << "\n";
  os << "wildness: " << to_string(r.verdict.kind);
  if (r.verdict.reason) os << " (" << to_string(*r.verdict.reason) << ")";
  if (!r.verdict.certificate.empty()) os << " [" << r.verdict.certificate << "]";
  os << "\n";
  if (!r.verdict.rank_conclusions.empty())
    os << "rank conclusions: " << r.verdict.rank_conclusions << "\n";
  os << "seed: " << r.seed << "\n";
  os << "time: " << r.elapsed_seconds << "s\n";
  return os.str();
}

}  // namespace wildforms
