#ifndef MUSTAFIN_IDEAL_HPP
#define MUSTAFIN_IDEAL_HPP

#include <map>
#include <mutex>
#include <vector>

#include "mustafin/groebner.hpp"
#include "mustafin/polynomial.hpp"

namespace mustafin {

/// Generator list with cached reduced Gröbner bases per monomial order.
/// Immutable after construction; the cache is a write-once slot per order.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (auto& g : gens_)
      if (g.ring() && !g.ring()->sameVars(*ring_))
        throw std::invalid_argument("generator outside ring");
  }

  Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lock(o.cacheMutex_);
    gbCache_ = o.gbCache_;
  }
  Ideal& operator=(const Ideal& o) {
    if (this != &o) {
      std::scoped_lock lock(cacheMutex_, o.cacheMutex_);
      ring_ = o.ring_;
      gens_ = o.gens_;
      gbCache_ = o.gbCache_;
    }
    return *this;
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring) {
    std::vector<Polynomial> g{Polynomial::constant(ring, Rational(1))};
    return Ideal(std::move(ring), std::move(g));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  const std::vector<Polynomial>& groebner(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cacheMutex_);
    auto key = ord.key();
    auto it = gbCache_.find(key);
    if (it != gbCache_.end()) return it->second;
    auto gb = buchberger(gens_, ord);
    return gbCache_.emplace(key, std::move(gb)).first->second;
  }

  bool isZeroIdeal() const { return groebner(MonomialOrder::degrevlex()).empty(); }

  bool isUnit() const {
    const auto& gb = groebner(MonomialOrder::degrevlex());
    return gb.size() == 1 && gb[0].isOne();
  }

  bool contains(const Polynomial& f) const {
    return normalForm(f, groebner(MonomialOrder::degrevlex()),
                      MonomialOrder::degrevlex())
        .isZero();
  }

  bool isMultihomogeneous() const {
    for (auto& g : gens_)
      if (!g.isMultihomogeneous()) return false;
    return true;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::map<std::string, std::vector<Polynomial>> gbCache_;
  mutable std::mutex cacheMutex_;
};

}  // namespace mustafin

#endif
