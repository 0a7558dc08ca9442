#ifndef MODINV_MODULAR_THEORY_HPP
#define MODINV_MODULAR_THEORY_HPP

#include <cctype>
#include <regex>
#include <string>

#include "modinv/modular/level_one.hpp"
#include "modinv/modular/su_n.hpp"
#include "modinv/modular/zn.hpp"

namespace modinv {

/// Accepts SU(2)_16, su2_16, SO(48)_1, so48, Z_5(a=2), zn5_2, E6, E6_1, G2_1.
inline TheoryId parse_theory(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  std::smatch m;
  if (std::regex_match(t, m, std::regex(R"(su\(?(\d+)\)?_(\d+))")))
    return TheoryId{"su", std::stoi(m[1]), std::stoi(m[2]), 0};
  if (std::regex_match(t, m, std::regex(R"(so\(?(\d+)\)?(_1)?)"))) return TheoryId{"so", std::stoi(m[1]), 1, 0};
  if (std::regex_match(t, m, std::regex(R"(z_?(\d+)\(a=(\d+)\))")) ||
      std::regex_match(t, m, std::regex(R"(zn?(\d+)_(\d+))")))
    return TheoryId{"zn", std::stoi(m[1]), 0, std::stoi(m[2])};
  if (std::regex_match(t, m, std::regex(R"(\(?(e6|e7|e8|g2)\)?(_1)?)"))) return TheoryId{m[1], 0, 1, 0};
  throw Error(ErrorCode::ParseError, "unrecognised theory '" + text + "'");
}

template <class Real>
ModularData<Real> build_modular_data(const TheoryId& id, const PrecisionConfig& cfg) {
  if (id.family == "su") return su_n_k<Real>(id.n, id.k, cfg);
  if (id.family == "zn") return zn_anyon<Real>(id.n, id.a, cfg);
  return level_one<Real>(id.family, id.n, cfg);
}

}  // namespace modinv

#endif  // MODINV_MODULAR_THEORY_HPP
