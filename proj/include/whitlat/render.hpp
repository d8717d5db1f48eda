#ifndef WHITLAT_RENDER_HPP
#define WHITLAT_RENDER_HPP

#include <string>

#include "json.hpp"

#include "whitlat/laurent.hpp"
#include "whitlat/weyl.hpp"

namespace whitlat {

/// Plain text, terms in canonical order: "z1^7*z2^3", "v*z1^2*z2*z3^2", "0".
std::string to_string(const LaurentPoly& p);

/// JSON array of term objects {"coeff": "p/q", "z": [..], "v": n}.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(int rank, const nlohmann::json& j);

/// Parse "2,3,1" (one-line) or "s1 s2" (word) or "1"/"e"/"id" (identity).
Permutation parse_permutation(const std::string& text, int degree);

/// Parse a comma list of integers.
std::vector<int> parse_int_list(const std::string& text);

} // namespace whitlat

#endif
