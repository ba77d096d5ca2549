#include "opgb/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace opgb {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (seen_slash) throw std::invalid_argument("bad rational: " + s);
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[k]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw std::invalid_argument("bad rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace opgb
