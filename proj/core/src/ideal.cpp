#include "lsw/ideal.hpp"

#include <cassert>

#include "lsw/groebner.hpp"

namespace lsw {

Ideal::Ideal(std::vector<Poly> gens, int nvars)
    : nv_(nvars), cache_(std::make_shared<Cache>()) {
  for (Poly& g : gens) {
    if (g.is_zero()) continue;
    assert(g.nvars() == nvars);
    gens_.push_back(std::move(g));
  }
}

const Basis& Ideal::groebner_basis(const MonomialOrder& ord, int degree_cap) const {
  if (!ord.global()) throw std::invalid_argument("groebner_basis requires a global order");
  const std::string key = ord.key() + "#" + std::to_string(degree_cap);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->entries.find(key);
  if (it == cache_->entries.end()) {
    Basis b{buchberger(gens_, ord, degree_cap), ord, BasisFlavor::Groebner};
    it = cache_->entries.emplace(key, std::move(b)).first;
  }
  return it->second;
}

const Basis& Ideal::standard_basis(int degree_cap) const {
  const MonomialOrder ord = MonomialOrder::negdegrevlex();
  const std::string key = ord.key() + "#" + std::to_string(degree_cap);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->entries.find(key);
  if (it == cache_->entries.end()) {
    Basis b{mora_standard_basis(gens_, degree_cap), ord, BasisFlavor::StandardLocal};
    it = cache_->entries.emplace(key, std::move(b)).first;
  }
  return it->second;
}

}  // namespace lsw
