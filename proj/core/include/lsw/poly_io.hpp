#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsw/poly.hpp"

namespace lsw {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Names the variable slots of a ring for parsing and printing.
class VarTable {
 public:
  static VarTable x(int n);             // x1..xn
  static VarTable u(int m);             // u1..um
  static VarTable ut(int m);            // u1..um, t
  static VarTable xt(int n);            // x1..xn, t
  static VarTable named(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  std::optional<int> index(const std::string& s) const;

 private:
  std::vector<std::string> names_;
};

// Grammar: sums of terms, `*` for products, `^` for powers, integer or
// rational (a/b) coefficients. Examples: "9*x1*x4 + x2^2", "-1/5*u1^5".
Poly parse_poly(const std::string& text, const VarTable& vars);

// Prints with terms in descending degrevlex order; parse(print(p)) == p.
std::string to_string(const Poly& p, const VarTable& vars);

}  // namespace lsw
