#pragma once

#include <string_view>
#include <vector>

#include "ntf/serialize.hpp"
#include "ntf/monomial.hpp"

// M(1, 0, 3) is x1*x3^3 in three variables.
template <class... T>
ntf::Monomial M(T... e) {
  return ntf::Monomial(std::vector<ntf::Exponent>{static_cast<ntf::Exponent>(e)...});
}

inline ntf::MonomialIdeal I(std::string_view text) { return ntf::parse_ideal(text); }

inline ntf::PrimeSupport P(std::size_t n, std::vector<std::size_t> vars) { return ntf::PrimeSupport(n, std::move(vars)); }
