#ifndef WILDFORMS_FAMILIES_HPP
#define WILDFORMS_FAMILIES_HPP

#include <string>
#include <vector>

#include "wildforms/borderdec.hpp"
#include "wildforms/groebner.hpp"
#include "wildforms/polynomial.hpp"

namespace wildforms {

// Component h (1-based) of the chain C_k carries the dual coordinates
// y_{3h-2} and y_{3h+1}; consecutive components share one point.
struct ChainOfLines {
  int components = 0;  // k
  int nvars = 0;       // 3k+2
  std::pair<int, int> component_vars(int h) const {
    return {3 * h - 2, 3 * h + 1};
  }
};

struct PointConfiguration {
  int k = 0, a = 0, b = 0;
  int nvars = 0;
  struct Pt {
    int component;           // 1-based
    Polynomial linear_form;  // primal linear form in the component's two variables
  };
  std::vector<Pt> points;
  // Coefficients of the linear dependence among the cubes, from the
  // chain-elimination procedure; zero on components outside [a, b].
  std::vector<Rational> relation;
};

VariableSet gd_vars(int d);  // v_0..v_{d-1}, u_0, u_1
Form gd_form(int d);         // sum_i v_i u_0^i u_1^{d-1-i}, d >= 3

Form fn_form(int n);  // n = 3k+1
ChainOfLines chain_of(int n);

// <y_{3h}, y_{3h+2}, y_{3h+1} y_{3(h+s)+1} for s >= 2> in 3k+2 dual variables.
GradedIdeal chain_ideal(int k);

// Ann(G_d)_{<= d-1} + <q> for a binary form q of degree d+2 in the duals of
// u_0, u_1.
GradedIdeal gd_vsp_ideal(int d, const Polynomial& q);

// 3 points per component, 4 on components a and b; default (a,b) = (1,k)
// (for k = 1 the five points sit on the single component).
PointConfiguration fn_point_configuration(int k, int a, int b);

// Border rank decompositions with the configured limiting points.
BorderDecomposition gd_decomposition(int d);
// a = b = 0 selects the default (1,k) configuration. Pairs whose outside
// components are adjacent to [a,b] are constructed with second-order
// curves; deeper pairs are rejected.
BorderDecomposition fn_decomposition(int n, int a = 0, int b = 0);

struct NamedForm {
  std::string name;
  VariableSet vars;
  Form form;
};

// Catalog: H5, Ikeda, L5, NonMinimal4, NonWildVH, Jet, ConicTangent, Cusp,
// Perazzo, Fermat(n,d), G<d>, F<n>.
NamedForm named_example(const std::string& name);
std::vector<std::string> named_example_catalog();

}  // namespace wildforms

#endif
