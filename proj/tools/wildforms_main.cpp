#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wildforms/analyze.hpp"
#include "wildforms/families.hpp"
#include "wildforms/parser.hpp"
#include "wildforms/tensor.hpp"

using namespace wildforms;

namespace {

struct GlobalOpts {
  bool json = false;
  bool exact = false;
  std::uint64_t seed = 0;
  int degree_bound = 0;  // 0: defaults
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Positional form input: inline polynomial text or a path to a file holding
// one. The variable count is the largest index mentioned plus one unless
// --vars is given.
NamedForm read_form_input(const std::string& input, int vars_override) {
  std::string text = input;
  if (std::ifstream probe(input); probe.good()) text = slurp(input);
  int max_index = -1;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    char c = text[i];
    if ((c == 'x' || c == 'y' || c == 'v') && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      int idx = std::atoi(text.c_str() + i + 1);
      max_index = std::max(max_index, idx);
    }
    if (c == 'u' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      max_index = std::max(max_index, 1);  // aliases handled below
  }
  int nvars = vars_override > 0 ? vars_override : max_index + 1;
  if (nvars < 1) throw SyntaxError("no variables found; use --vars");
  // Alias tokens u/v force the alias layout: count v's from the text.
  bool has_alias = text.find('u') != std::string::npos || text.find('v') != std::string::npos;
  VariableSet vars = VariableSet::standard(nvars);
  if (has_alias) {
    int max_v = -1;
    for (std::size_t i = 0; i + 1 < text.size(); ++i)
      if (text[i] == 'v' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
        max_v = std::max(max_v, std::atoi(text.c_str() + i + 1));
    vars = VariableSet::with_vu_alias(max_v + 1);
  }
  return NamedForm{"", vars, parse_form(text, vars)};
}

int analyze_exit_code(const AnalysisReport& r) {
  return r.verdict.kind == WildnessVerdict::Kind::NotApplicable ? 2 : 0;
}

nlohmann::json limiting_scheme_json(const LimitingSchemeResult& res, int bound,
                                    const VariableSet& vars) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = "limiting-scheme";
  j["degree_bound"] = bound;
  j["length"] = res.length;
  j["length_matches_summands"] = res.length_matches_summands;
  j["contained_in_annihilator"] = res.contained_in_annihilator;
  j["hf_unsaturated"] = res.hf_unsaturated;
  nlohmann::json sup = nlohmann::json::array();
  for (const auto& p : res.support) {
    nlohmann::json pt = nlohmann::json::array();
    for (const auto& c : p) pt.push_back(to_string(c));
    sup.push_back(pt);
  }
  j["support"] = sup;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : res.saturated.gens()) gens.push_back(print_poly(g, vars));
  j["saturated_generators"] = gens;
  return j;
}

int shrink_bound(int nvars, int wanted) {
  int bound = wanted;
  while (bound > 3 &&
         monomial_basis(nvars, bound).size() > 2000)
    --bound;
  return bound;
}

// Binary form q in the dual u-variables: distinct rational roots when q
// splits; empty otherwise.
std::vector<std::vector<Rational>> rational_roots_on_u_line(const Polynomial& q, int d) {
  const int n = d + 2;
  // candidates alpha | coeff of y_{u1}^{d+2}, beta | coeff of y_{u0}^{d+2}
  Polynomial rem = q;
  std::vector<std::vector<Rational>> roots;
  // first strip powers of y_{u0} and y_{u1} (roots at infinity/zero)
  auto divide_out = [&](int var, int point_slot) {
    while (!rem.is_zero()) {
      bool divisible = true;
      for (const auto& t : rem.terms())
        if (t.mono[var] == 0) divisible = false;
      if (!divisible) break;
      std::vector<Term> ts;
      for (const auto& t : rem.terms()) {
        Monomial m = t.mono;
        m[var] -= 1;
        ts.push_back({std::move(m), t.coeff});
      }
      rem = Polynomial::from_terms(Ring::Dual, n, std::move(ts));
      std::vector<Rational> p(n, Rational(0));
      p[point_slot] = 1;
      roots.push_back(p);
    }
  };
  // y_{u0} vanishes at the point u = (0 : 1) and vice versa
  divide_out(d, n - 1);
  divide_out(d + 1, d);
  // remaining part: try small integer ratios alpha/beta with |alpha|,|beta| <= 64
  for (int beta = 1; beta <= 64 && rem.degree() > 0; ++beta)
    for (int alpha = -64; alpha <= 64 && rem.degree() > 0; ++alpha) {
      if (std::gcd(std::abs(alpha), beta) != 1) continue;
      // root (alpha : beta) of q means the linear factor beta y_u0 - alpha y_u1
      std::vector<Rational> at(n, Rational(0));
      at[d] = alpha;
      at[d + 1] = beta;
      while (rem.degree() > 0 && is_zero(rem.eval(at))) {
        // divide by (beta y_u0 - alpha y_u1)
        Polynomial factor =
            Polynomial::variable(Ring::Dual, n, d) * Rational(beta) -
            Polynomial::variable(Ring::Dual, n, d + 1) * Rational(alpha);
        // long division in the two u-duals
        std::vector<Term> quo;
        Polynomial cur = rem;
        while (!cur.is_zero()) {
          const Term& lt = cur.terms().front();
          Monomial m = lt.mono;
          if (!is_zero(Rational(beta)) && m[d] > 0) {
            m[d] -= 1;
            Rational c = lt.coeff / Rational(beta);
            quo.push_back({m, c});
            cur = cur - factor * Polynomial::monomial(Ring::Dual, m, c);
          } else {
            quo.clear();
            break;
          }
        }
        if (quo.empty()) break;
        rem = Polynomial::from_terms(Ring::Dual, n, std::move(quo));
        std::vector<Rational> p(n, Rational(0));
        p[d] = alpha;
        p[d + 1] = beta;
        roots.push_back(p);
      }
    }
  if (rem.degree() > 0) return {};  // does not split over Q in reach
  // distinctness
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Matrix<Rational> two(2, n);
      two.set_row(0, roots[i]);
      two.set_row(1, roots[j]);
      if (rank(two) < 2) return {};
    }
  return roots;
}

int run_vsp_check(int d, const std::string& q_text, const GlobalOpts& g) {
  VariableSet vars = gd_vars(d);
  Polynomial q = parse_poly(q_text, vars, Ring::Dual);
  GradedIdeal j = gd_vsp_ideal(d, q);
  Form gd = gd_form(d);
  nlohmann::json out;
  out["schema"] = 1;
  out["kind"] = "vsp-check";
  out["d"] = d;
  out["q"] = print_poly(q, vars);
  std::vector<int> hf;
  bool generic = true;
  for (int k = 0; k <= d + 3; ++k) {
    int v = hf_of_ideal(j, k);
    hf.push_back(v);
    int expect = std::min<int>(d + 2, static_cast<int>(monomial_basis(d + 2, k).size()));
    if (k >= 1 && v != expect) generic = false;
  }
  out["hilbert_function"] = hf;
  out["generic_hilbert_function"] = generic;
  bool contained = true;
  for (const auto& gen : j.gens())
    if (!apply_dual(gen, gd.poly()).is_zero()) contained = false;
  out["contained_in_annihilator"] = contained;
  auto roots = rational_roots_on_u_line(q, d);
  if (!roots.empty() && static_cast<int>(roots.size()) == d + 2) {
    GradedIdeal pts = ideal_of_points(vars, roots);
    out["saturation_matches_points_oracle"] = ideal_equal(saturation(j), pts);
  } else {
    out["saturation_matches_points_oracle"] = nullptr;
  }
  if (g.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "q = " << out["q"].get<std::string>() << "\n";
    std::cout << "HF(T/J):";
    for (int v : hf) std::cout << " " << v;
    std::cout << "\ngeneric hilbert function: " << (generic ? "yes" : "no") << "\n";
    std::cout << "J inside Ann(G_d): " << (contained ? "yes" : "no") << "\n";
    if (out["saturation_matches_points_oracle"].is_null())
      std::cout << "points oracle: skipped (q does not split with distinct roots)\n";
    else
      std::cout << "saturation matches points oracle: "
                << (out["saturation_matches_points_oracle"].get<bool>() ? "yes" : "no")
                << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification toolkit for wild forms"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_flag("--json", g.json, "machine-readable output with sorted keys");
  app.add_flag("--exact", g.exact, "exact symbolic determinants everywhere");
  app.add_option("--seed", g.seed, "seed for all pseudorandom choices");
  app.add_option("--degree-bound", g.degree_bound,
                 "degree bound for flat-limit computations");

  // analyze
  std::string an_input, an_name;
  int an_vars = 0;
  bool certify = false, skip_sat = false;
  auto* an = app.add_subcommand("analyze", "full report for a form");
  an->add_option("form", an_input, "polynomial text or file");
  an->add_option("--name", an_name, "catalog name (H5, Ikeda, Perazzo, G4, F7, ...)");
  an->add_option("--vars", an_vars, "number of variables");
  an->add_flag("--certify-family", certify,
               "construct and verify the family decomposition as certificate");
  an->add_flag("--skip-saturation", skip_sat, "skip the saturation finding");

  // family
  std::string fam_kind, fam_sub, fam_q, fam_pair;
  int fam_param = 0;
  auto* fam = app.add_subcommand("family", "G_d / F_n constructions");
  fam->add_option("kind", fam_kind, "gd or fn")->required();
  fam->add_option("parameter", fam_param, "d (>= 3) or n (= 3k+1)")->required();
  fam->add_option("action", fam_sub, "emit | decompose | verify | vsp-check")
      ->required();
  fam->add_option("--q", fam_q, "binary dual form for vsp-check");
  fam->add_option("--pair", fam_pair, "a,b configuration for fn");

  // algebra
  std::string alg_form, alg_file, alg_sub, alg_ell;
  int alg_d = 3;
  auto* alg = app.add_subcommand("algebra", "finite algebra operations");
  alg->add_option("action", alg_sub, "gorenstein | tensor | from-tensor")->required();
  alg->add_option("--form", alg_form, "form input (primal polynomial)");
  alg->add_option("--file", alg_file, "algebra or tensor JSON file");
  alg->add_option("--d", alg_d, "tensor way count");
  alg->add_option("--ell", alg_ell, "contraction functional, comma separated");

  // top-level vsp-check
  int vsp_d = 3;
  std::string vsp_q;
  auto* vsp = app.add_subcommand("vsp-check", "VSP ideal checks for G_d");
  vsp->add_option("d", vsp_d, "family parameter")->required();
  vsp->add_option("--q", vsp_q, "binary dual form of degree d+2")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) {
      NamedForm nf = an_name.empty() ? read_form_input(an_input, an_vars)
                                     : named_example(an_name);
      AnalyzeOptions opts;
      opts.exact = g.exact;
      opts.seed = g.seed;
      opts.certify_family = certify;
      opts.saturation_check = !skip_sat;
      AnalysisReport rep = analyze_form(nf, opts);
      std::cout << (g.json ? report_to_json(rep) : report_to_text(rep)) << "\n";
      return analyze_exit_code(rep);
    }

    if (vsp->parsed()) return run_vsp_check(vsp_d, vsp_q, g);

    if (fam->parsed()) {
      if (fam_kind != "gd" && fam_kind != "fn")
        throw Error("family kind must be gd or fn");
      const bool is_gd = fam_kind == "gd";
      int pa = 0, pb = 0;
      if (!fam_pair.empty()) {
        auto comma = fam_pair.find(',');
        if (comma == std::string::npos) throw Error("--pair expects a,b");
        pa = std::stoi(fam_pair.substr(0, comma));
        pb = std::stoi(fam_pair.substr(comma + 1));
      }
      NamedForm nf = is_gd ? NamedForm{"G" + std::to_string(fam_param),
                                       gd_vars(fam_param), gd_form(fam_param)}
                           : NamedForm{"F" + std::to_string(fam_param),
                                       VariableSet::standard(fam_param + 1),
                                       fn_form(fam_param)};
      if (fam_sub == "emit") {
        if (g.json) {
          nlohmann::json j;
          j["schema"] = 1;
          j["kind"] = "form";
          j["name"] = nf.name;
          j["nvars"] = nf.form.nvars();
          j["degree"] = nf.form.degree();
          j["form"] = print_poly(nf.form.poly(), nf.vars);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << print_poly(nf.form.poly(), nf.vars) << "\n";
        }
        return 0;
      }
      if (fam_sub == "vsp-check") {
        if (!is_gd) throw Error("vsp-check applies to gd only");
        if (fam_q.empty()) throw Error("vsp-check needs --q");
        return run_vsp_check(fam_param, fam_q, g);
      }
      BorderDecomposition dec =
          is_gd ? gd_decomposition(fam_param) : fn_decomposition(fam_param, pa, pb);
      if (fam_sub == "decompose") {
        std::cout << decomposition_to_json(dec) << "\n";
        return 0;
      }
      if (fam_sub == "verify") {
        VerifyReport rep = verify_border_decomposition(dec, nf.form);
        int bound = g.degree_bound > 0
                        ? g.degree_bound
                        : shrink_bound(nf.form.nvars(),
                                       static_cast<int>(dec.summands.size()) + 1);
        LimitingSchemeResult scheme = limiting_scheme_ideal(dec, nf.form, bound);
        if (g.json) {
          nlohmann::json j = limiting_scheme_json(scheme, bound, nf.vars);
          j["decomposition_verified"] = rep.ok;
          j["summands"] = static_cast<int>(dec.summands.size());
          j["name"] = nf.name;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "decomposition of " << nf.name << " with "
                    << dec.summands.size() << " summands: "
                    << (rep.ok ? "verified" : "FAILED") << "\n";
          std::cout << "limit ideal computed up to degree " << bound << "\n";
          std::cout << "limiting scheme length: " << scheme.length
                    << (scheme.length_matches_summands ? " (matches summands)" : "")
                    << "\n";
          std::cout << "unsaturated limit ideal inside Ann(F): "
                    << (scheme.contained_in_annihilator ? "yes" : "no") << "\n";
          std::cout << "support points: " << scheme.support.size() << "\n";
        }
        return rep.ok ? 0 : 1;
      }
      throw Error("unknown family action " + fam_sub);
    }

    if (alg->parsed()) {
      if (alg_sub == "gorenstein") {
        FiniteAlgebra a = alg_file.empty()
                              ? apolar_algebra(read_form_input(alg_form, 0).form)
                              : algebra_from_json(slurp(alg_file));
        auto w = is_gorenstein(a, g.seed);
        nlohmann::json j;
        j["schema"] = 1;
        j["kind"] = "gorenstein";
        j["dim"] = a.dim();
        j["gorenstein"] = w.has_value();
        if (w) {
          nlohmann::json e = nlohmann::json::array();
          for (const auto& c : w->functional) e.push_back(to_string(c));
          j["witness"] = e;
        } else {
          try {
            j["socle_dimension"] = socle_dimension_graded(a);
          } catch (const NotAnIdeal&) {
          }
        }
        if (g.json) {
          std::cout << j.dump(2) << "\n";
        } else if (w) {
          std::cout << "Gorenstein; witness functional: " << j["witness"].dump()
                    << "\n";
        } else {
          std::cout << "not Gorenstein";
          if (j.contains("socle_dimension"))
            std::cout << " (socle dimension " << j["socle_dimension"] << ")";
          std::cout << "\n";
        }
        return 0;
      }
      if (alg_sub == "tensor") {
        if (!alg_form.empty()) {
          Form f = read_form_input(alg_form, 0).form;
          if (alg_d != f.degree())
            throw Error("--d must equal the form degree for symmetric tensors");
          std::cout << tensor_to_json(tensor_of_form(f)) << "\n";
        } else {
          FiniteAlgebra a = algebra_from_json(slurp(alg_file));
          std::cout << tensor_to_json(structure_tensor(a, alg_d)) << "\n";
        }
        return 0;
      }
      if (alg_sub == "from-tensor") {
        Tensor t = alg_form.empty()
                       ? tensor_from_json(slurp(alg_file))
                       : tensor_of_form(read_form_input(alg_form, 0).form);
        std::vector<Rational> ell;
        if (!alg_ell.empty()) {
          std::stringstream ss(alg_ell);
          std::string part;
          while (std::getline(ss, part, ',')) ell.push_back(rational_from_string(part));
        } else {
          auto w = hessian_witness(form_of_tensor(t), g.seed);
          if (!w) throw Error("no full-rank contraction exists (vanishing Hessian)");
          ell = *w;
        }
        ReconstructedAlgebra rec = algebra_from_tensor(t, ell);
        nlohmann::json j;
        j["schema"] = 1;
        j["kind"] = "reconstruction";
        j["identities"] = rec.report.str();
        j["algebra"] = nlohmann::json::parse(algebra_to_json(rec.algebra));
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      throw Error("unknown algebra action " + alg_sub);
    }
  } catch (const IdentityFailure& e) {
    std::cerr << "error: " << e.what() << "\n" << e.report << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
