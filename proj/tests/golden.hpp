#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "opgb/presentation.hpp"

// Relation lists as printed for the shuffle presentation, plus helpers.
namespace opgb::golden {

inline const std::vector<std::string> kPrintedNovikov = {
    "x(x(1 2) 3) - x(1 x(2 3)) - x(y(1 2) 3) + y(x(1 3) 2)",
    "x(x(1 3) 2) - x(1 y(2 3)) - x(y(1 3) 2) + y(x(1 2) 3)",
    "y(1 x(2 3)) - y(y(1 3) 2) - y(1 y(2 3)) + y(y(1 2) 3)",
    "x(x(1 2) 3) - x(x(1 3) 2)",
    "x(y(1 2) 3) - y(1 x(2 3))",
    "x(y(1 3) 2) - y(1 y(2 3))",
};
inline const std::string kPrintedJacobi = "z(z(1 2) 3) - z(1 z(2 3)) - z(z(1 3) 2)";
inline const std::vector<std::string> kPrintedMixed = {
    "z(1 x(2 3)) + z(y(1 2) 3) - x(z(1 2) 3) - y(1 z(2 3)) - y(z(1 3) 2)",
    "-z(x(1 3) 2) + z(x(1 2) 3) + x(z(1 2) 3) - x(z(1 3) 2) - x(1 z(2 3))",
    "-y(z(1 2) 3) + z(1 y(2 3)) + z(y(1 3) 2) - x(z(1 3) 2) + y(1 z(2 3))",
};
inline const std::vector<std::string> kPrintedSpecial = {
    "z(1 x(x(2 3) 4)) - x(z(1 x(2 3)) 4) - x(z(1 x(2 4)) 3) + x(x(z(1 2) 3) 4)",
    "z(1 x(y(2 3) 4)) - x(z(1 y(2 3)) 4) - x(z(1 x(3 4)) 2) + x(x(z(1 3) 2) 4)",
    "z(1 y(2 y(3 4))) - x(z(1 y(3 4)) 2) - x(z(1 y(2 4)) 3) + x(x(z(1 4) 2) 3)",
    "-z(x(x(1 3) 4) 2) + x(z(x(1 3) 2) 4) + x(z(x(1 4) 2) 3) - x(x(z(1 2) 3) 4)",
    "-z(x(y(1 3) 4) 2) + x(z(y(1 3) 2) 4) - y(1 z(2 x(3 4))) + x(y(1 z(2 3)) 4)",
    "-z(x(y(1 4) 3) 2) + x(z(y(1 4) 2) 3) - y(1 z(2 y(3 4))) + x(y(1 z(2 4)) 3)",
    "-z(x(x(1 2) 4) 3) + x(z(x(1 2) 3) 4) + x(z(x(1 4) 3) 2) - x(x(z(1 3) 2) 4)",
    "-z(x(y(1 2) 4) 3) + x(z(y(1 2) 3) 4) + y(1 z(x(2 4) 3)) - y(1 x(z(2 3) 4))",
    "-z(x(y(1 4) 2) 3) + x(z(y(1 4) 3) 2) + y(1 z(y(2 4) 3)) + y(1 y(2 z(3 4)))",
    "-z(x(x(1 2) 3) 4) + x(z(x(1 2) 4) 3) + x(z(x(1 3) 4) 2) - x(x(z(1 4) 2) 3)",
    "-z(x(y(1 2) 3) 4) + x(z(y(1 2) 4) 3) + y(1 z(x(2 3) 4)) - x(y(1 z(2 4)) 3)",
    "-z(x(y(1 3) 2) 4) + x(z(y(1 3) 4) 2) + y(1 z(y(2 3) 4)) - x(y(1 z(3 4)) 2)",
    "z(x(1 2) x(3 4)) - x(z(x(1 2) 3) 4) - x(z(1 x(3 4)) 2) + 2 x(x(z(1 3) 2) 4) + z(x(1 4) y(2 3)) - "
    "x(z(1 y(2 3)) 4) - x(z(x(1 4) 3) 2)",
    "z(x(1 3) x(2 4)) - x(z(1 x(2 4)) 3) - x(z(x(1 3) 2) 4) + 2 x(x(z(1 2) 3) 4) + z(x(1 4) x(2 3)) - "
    "x(z(1 x(2 3)) 4) - x(z(x(1 4) 2) 3)",
    "z(y(1 2) y(3 4)) - y(1 z(2 y(3 4))) - x(z(y(1 2) 4) 3) + 2 y(1 x(z(2 4) 3)) - z(y(1 4) x(2 3)) + "
    "x(z(y(1 4) 2) 3) - y(1 z(x(2 3) 4))",
    "z(y(1 2) x(3 4)) - y(1 z(2 x(3 4))) - x(z(y(1 2) 3) 4) + 2 y(1 x(z(2 3) 4)) - z(y(1 3) x(2 4)) + "
    "x(z(y(1 3) 2) 4) - y(1 z(x(2 4) 3))",
    "z(y(1 3) y(2 4)) + y(1 z(y(2 4) 3)) - x(z(y(1 3) 4) 2) + 2 y(1 y(2 z(3 4))) - z(y(1 4) y(2 3)) - "
    "y(1 z(y(2 3) 4)) + x(z(y(1 4) 3) 2)",
    "z(x(1 2) y(3 4)) - x(z(1 y(3 4)) 2) - x(z(x(1 2) 4) 3) + 2 x(x(z(1 4) 2) 3) + z(x(1 3) y(2 4)) - "
    "x(z(x(1 3) 4) 2) - x(z(1 y(2 4)) 3)",
};

inline std::vector<std::string> all_printed() {
  std::vector<std::string> out = kPrintedNovikov;
  out.push_back(kPrintedJacobi);
  out.insert(out.end(), kPrintedMixed.begin(), kPrintedMixed.end());
  out.insert(out.end(), kPrintedSpecial.begin(), kPrintedSpecial.end());
  return out;
}

inline OperadElement P(const std::string& s) { return OperadElement::parse(s, gd_signature()); }

inline std::vector<OperadElement> parse_all(const std::vector<std::string>& v) {
  std::vector<OperadElement> out;
  for (const auto& s : v) out.push_back(P(s));
  return out;
}

// f equals c*g for some nonzero c
inline bool proportional(const OperadElement& f, const OperadElement& g) {
  if (f.size() != g.size() || f.is_zero()) return false;
  Rational c = f.terms().front().second / g.terms().front().second;
  return f == g * c;
}

inline bool same_up_to_scalars(const std::vector<OperadElement>& a, const std::vector<OperadElement>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& f : a)
    if (std::none_of(b.begin(), b.end(), [&](const OperadElement& g) { return proportional(f, g); })) return false;
  return true;
}

inline std::vector<OperadElement> orbit(const std::string& name) {
  return symmetric_to_shuffle(named_identities().at(name), gd_signature());
}

inline std::vector<OperadElement> concat(std::vector<OperadElement> a, const std::vector<OperadElement>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace opgb::golden
