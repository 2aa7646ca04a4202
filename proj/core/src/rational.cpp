#include "lsw/rational.hpp"

#include <stdexcept>

namespace lsw {

Q parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Q r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  return r;
}

std::string to_string(const Q& x) { return x.get_str(); }

}  // namespace lsw
