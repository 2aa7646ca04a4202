#include "lsw/poly_io.hpp"

#include <algorithm>
#include <cctype>

namespace lsw {

VarTable VarTable::x(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return named(std::move(names));
}

VarTable VarTable::u(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  return named(std::move(names));
}

VarTable VarTable::ut(int m) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("u" + std::to_string(i));
  names.push_back("t");
  return named(std::move(names));
}

VarTable VarTable::xt(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("t");
  return named(std::move(names));
}

VarTable VarTable::named(std::vector<std::string> names) {
  VarTable t;
  t.names_ = std::move(names);
  return t;
}

std::optional<int> VarTable::index(const std::string& s) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == s) return i;
  return std::nullopt;
}

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error("expected number at position " + std::to_string(pos) + " in: " + s);
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) throw parse_error("expected denominator in: " + s);
    }
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos == start) throw parse_error("expected identifier at position " + std::to_string(pos) + " in: " + s);
    return s.substr(start, pos - start);
  }
};

int parse_exponent(Lexer& lx) {
  const std::string n = lx.number();
  if (n.find('/') != std::string::npos) throw parse_error("fractional exponent in: " + lx.s);
  return std::stoi(n);
}

}  // namespace

Poly parse_poly(const std::string& text, const VarTable& vars) {
  const int nv = vars.size();
  Lexer lx{text};
  Poly result(nv);
  bool first = true;
  while (!lx.eof()) {
    int sign = 1;
    if (lx.accept('+')) {
      sign = 1;
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw parse_error("expected '+' or '-' at position " + std::to_string(lx.pos) + " in: " + text);
    }
    first = false;
    // allow stacked unary signs like "- -3"
    while (true) {
      if (lx.accept('-'))
        sign = -sign;
      else if (lx.accept('+'))
        ;
      else
        break;
    }
    Q coef(sign);
    Monomial mono(nv);
    bool saw_factor = false;
    while (true) {
      const char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= parse_rational(lx.number());
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::string name = lx.ident();
        const auto idx = vars.index(name);
        if (!idx) throw parse_error("unknown variable '" + name + "' in: " + text);
        int e = 1;
        if (lx.accept('^')) e = parse_exponent(lx);
        if (e < 0) throw parse_error("negative exponent in: " + text);
        mono = mono * Monomial::var(nv, *idx, e);
        saw_factor = true;
      } else {
        throw parse_error("expected factor at position " + std::to_string(lx.pos) + " in: " + text);
      }
      if (!lx.accept('*')) break;
    }
    if (!saw_factor) throw parse_error("empty term in: " + text);
    result.add_term(mono, coef);
  }
  if (first) throw parse_error("empty polynomial text");
  return result;
}

std::string to_string(const Poly& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  const MonomialOrder drl = MonomialOrder::degrevlex();
  std::vector<std::pair<Monomial, Q>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return drl.compare(a.first, b.first) > 0; });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool neg = sgn(c) < 0;
    const Q mag = neg ? Q(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string vpart;
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!vpart.empty()) vpart += "*";
      vpart += vars.name(i);
      if (m.exp(i) > 1) vpart += "^" + std::to_string(m.exp(i));
    }
    if (vpart.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vpart;
    } else {
      out += to_string(mag) + "*" + vpart;
    }
  }
  return out;
}

}  // namespace lsw
