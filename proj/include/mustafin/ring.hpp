#ifndef MUSTAFIN_RING_HPP
#define MUSTAFIN_RING_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace mustafin {

/// A variable of a polynomial ring. Plücker variables carry the (vertex,
/// level) pair of the block they belong to; the distinguished parameter t
/// and auxiliary elimination variables carry no block.
struct VarInfo {
  std::string name;
  int vertex = -1;  // 1-based vertex index, -1 if none
  int level = -1;   // 1-based level index, -1 if none
  bool isParam = false;
};

/// A block of variables: the Plücker coordinates of one (vertex, level).
struct Block {
  int vertex;
  int level;
  std::vector<int> varIdx;  // indices into the ring's variable list
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// An ordered list of named variables with an optional block structure and
/// an optional distinguished parameter variable. Immutable once built.
class PolyRing {
 public:
  static RingPtr make(std::vector<VarInfo> vars, std::vector<Block> blocks) {
    auto r = std::shared_ptr<PolyRing>(new PolyRing);
    r->vars_ = std::move(vars);
    r->blocks_ = std::move(blocks);
    for (int i = 0; i < (int)r->vars_.size(); ++i) {
      const auto& v = r->vars_[i];
      if (!r->byName_.emplace(v.name, i).second)
        throw std::invalid_argument("duplicate variable name: " + v.name);
      if (v.isParam) {
        if (r->paramIdx_ >= 0) throw std::invalid_argument("two PARAM variables");
        r->paramIdx_ = i;
      }
    }
    return r;
  }

  /// Plain ring for tests and generic computations, no blocks.
  static RingPtr simple(const std::vector<std::string>& names) {
    std::vector<VarInfo> vs;
    for (auto& n : names) vs.push_back({n, -1, -1, false});
    return make(std::move(vs), {});
  }

  /// Same as simple() but with an explicit block partition (sizes in order).
  static RingPtr blocked(const std::vector<std::string>& names,
                         const std::vector<int>& blockSizes) {
    std::vector<VarInfo> vs;
    std::vector<Block> bs;
    int at = 0;
    for (int b = 0; b < (int)blockSizes.size(); ++b) {
      Block blk{b + 1, 1, {}};
      for (int i = 0; i < blockSizes[b]; ++i) {
        vs.push_back({names[at], b + 1, 1, false});
        blk.varIdx.push_back(at);
        ++at;
      }
      bs.push_back(std::move(blk));
    }
    for (; at < (int)names.size(); ++at) vs.push_back({names[at], -1, -1, false});
    return make(std::move(vs), std::move(bs));
  }

  /// New ring with extra (block-free) variables appended.
  RingPtr extended(const std::vector<std::string>& extraNames) const {
    std::vector<VarInfo> vs = vars_;
    for (auto& n : extraNames) vs.push_back({n, -1, -1, false});
    return make(std::move(vs), blocks_);
  }

  int varCount() const { return (int)vars_.size(); }
  const VarInfo& var(int i) const { return vars_[i]; }
  const std::vector<VarInfo>& vars() const { return vars_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  int paramIdx() const { return paramIdx_; }

  int indexOf(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end()) throw std::invalid_argument("unknown variable: " + name);
    return it->second;
  }
  bool hasVar(const std::string& name) const { return byName_.count(name) > 0; }

  bool sameVars(const PolyRing& other) const {
    if (vars_.size() != other.vars_.size()) return false;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name != other.vars_[i].name) return false;
    return true;
  }

 private:
  PolyRing() = default;
  std::vector<VarInfo> vars_;
  std::vector<Block> blocks_;
  std::map<std::string, int> byName_;
  int paramIdx_ = -1;
};

}  // namespace mustafin

#endif
