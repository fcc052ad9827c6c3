#include "wildforms/variables.hpp"

#include <cctype>

namespace wildforms {

VariableSet VariableSet::standard(int count) {
  VariableSet vs;
  vs.count_ = count;
  for (int i = 0; i < count; ++i) {
    vs.primal_.push_back("x" + std::to_string(i));
    vs.dual_.push_back("y" + std::to_string(i));
  }
  return vs;
}

VariableSet VariableSet::with_vu_alias(int v_count) {
  VariableSet vs = standard(v_count + 2);
  vs.v_count_ = v_count;
  for (int i = 0; i < v_count; ++i) vs.primal_[i] = "v" + std::to_string(i);
  vs.primal_[v_count] = "u0";
  vs.primal_[v_count + 1] = "u1";
  return vs;
}

std::optional<std::pair<Ring, int>> VariableSet::lookup(const std::string& token) const {
  if (token.size() < 2) return std::nullopt;
  char head = token[0];
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return std::nullopt;
  int idx = std::stoi(token.substr(1));
  switch (head) {
    case 'x':
      if (idx < count_) return std::make_pair(Ring::Primal, idx);
      return std::nullopt;
    case 'y':
      if (idx < count_) return std::make_pair(Ring::Dual, idx);
      return std::nullopt;
    case 'v':
      if (v_count_ >= 0 && idx < v_count_) return std::make_pair(Ring::Primal, idx);
      return std::nullopt;
    case 'u':
      if (v_count_ >= 0 && idx < 2)
        return std::make_pair(Ring::Primal, v_count_ + idx);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace wildforms
