#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcond {

// Variable classes: base coordinates x, cotangent symbols (xi / eta),
// and parameters (s, t, lambda, mu...).
enum class VarClass : uint8_t { Base, Cotangent, EtaCotangent, Param };

struct VarDecl {
  VarClass cls = VarClass::Base;
  int index = 1;  // 1-based inside its class
  std::string name;

  bool operator==(const VarDecl& o) const {
    return cls == o.cls && index == o.index && name == o.name;
  }
};

// Dense exponent vector over a ring's variable list.
using Expvec = std::vector<int32_t>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Immutable variable context. Polynomials carry a RingPtr; rings compare
// by content so transported values interoperate.
class Ring {
 public:
  explicit Ring(std::vector<VarDecl> vars) : vars_(std::move(vars)) {
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (!byName_.emplace(vars_[i].name, i).second)
        throw std::invalid_argument("duplicate variable name: " + vars_[i].name);
    }
  }

  static RingPtr make(std::vector<VarDecl> vars) {
    return std::make_shared<Ring>(std::move(vars));
  }

  // n base variables named as given.
  static RingPtr poly_ring(const std::vector<std::string>& names) {
    std::vector<VarDecl> vs;
    for (size_t i = 0; i < names.size(); ++i)
      vs.push_back({VarClass::Base, int(i) + 1, names[i]});
    return make(std::move(vs));
  }

  size_t size() const { return vars_.size(); }
  const VarDecl& var(size_t i) const { return vars_.at(i); }
  const std::vector<VarDecl>& vars() const { return vars_; }

  int find(const std::string& name) const {
    auto it = byName_.find(name);
    return it == byName_.end() ? -1 : int(it->second);
  }
  int require(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw std::invalid_argument("unknown variable: " + name);
    return i;
  }

  std::vector<int> indices_of(VarClass c) const {
    std::vector<int> out;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].cls == c) out.push_back(int(i));
    return out;
  }

  RingPtr extended(const std::vector<VarDecl>& extra) const {
    std::vector<VarDecl> vs = vars_;
    vs.insert(vs.end(), extra.begin(), extra.end());
    return make(std::move(vs));
  }

  // Subring keeping the flagged variables (in order).
  RingPtr restricted(const std::vector<bool>& keep) const {
    std::vector<VarDecl> vs;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (keep[i]) vs.push_back(vars_[i]);
    return make(std::move(vs));
  }

  bool operator==(const Ring& o) const { return vars_ == o.vars_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  std::vector<VarDecl> vars_;
  std::map<std::string, size_t> byName_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace dcond
