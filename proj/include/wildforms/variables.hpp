#ifndef WILDFORMS_VARIABLES_HPP
#define WILDFORMS_VARIABLES_HPP

#include <optional>
#include <string>
#include <vector>

namespace wildforms {

enum class Ring { Primal, Dual };

// Primal ring S (x-variables, where forms live) and dual ring T
// (y-variables, acting by differentiation). Families from the source
// material use v_i/u_j names for the primal variables; those are aliases
// of x_i in a fixed layout: v_0..v_{m-1}, u_0, u_1.
class VariableSet {
 public:
  static VariableSet standard(int count);
  // count = v_count + 2 primal variables named v0..v_{m-1}, u0, u1.
  static VariableSet with_vu_alias(int v_count);

  int count() const { return count_; }
  const std::string& primal_name(int i) const { return primal_[i]; }
  const std::string& dual_name(int i) const { return dual_[i]; }
  bool has_alias() const { return v_count_ >= 0; }
  int v_count() const { return v_count_; }

  // Token -> (ring, index). Accepts canonical x<i>/y<i> names always and
  // v<i>/u<j> when this set carries the alias.
  std::optional<std::pair<Ring, int>> lookup(const std::string& token) const;

  bool operator==(const VariableSet& o) const {
    return count_ == o.count_ && v_count_ == o.v_count_;
  }

 private:
  int count_ = 0;
  int v_count_ = -1;  // -1: plain x-naming
  std::vector<std::string> primal_, dual_;
};

}  // namespace wildforms

#endif
