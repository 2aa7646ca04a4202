#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsw/poly.hpp"

namespace lsw {

// Thrown when a basis computation exceeds its degree guard instead of
// running unbounded.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultDegreeCap = 24;

enum class BasisFlavor { Groebner, StandardLocal };

struct Basis {
  std::vector<Poly> elements;
  MonomialOrder order;
  BasisFlavor flavor;
};

// Finitely generated ideal with write-once basis caches keyed by order.
// Copies share the cache; an Ideal is immutable after construction.
class Ideal {
 public:
  Ideal(std::vector<Poly> gens, int nvars);

  int nvars() const { return nv_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool zero() const { return gens_.empty(); }

  // Reduced Groebner basis (unique for the ideal and order); `ord` must be
  // global.
  const Basis& groebner_basis(const MonomialOrder& ord = MonomialOrder::degrevlex(),
                              int degree_cap = kDefaultDegreeCap) const;

  // Mora standard basis for local-negdegrevlex, minimalized and monic.
  const Basis& standard_basis(int degree_cap = kDefaultDegreeCap) const;

 private:
  int nv_;
  std::vector<Poly> gens_;

  struct Cache {
    std::mutex mu;
    std::map<std::string, Basis> entries;
  };
  std::shared_ptr<Cache> cache_;
};

}  // namespace lsw
