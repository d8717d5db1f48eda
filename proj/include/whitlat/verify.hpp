#ifndef WHITLAT_VERIFY_HPP
#define WHITLAT_VERIFY_HPP

#include "whitlat/lattice.hpp"

namespace whitlat {

/// Enumerate all weakly decreasing (lam+rho) vectors of length r with parts
/// in [0, max_part], returned as lam (the rho shift already removed).
std::vector<WeightVec> almost_dominant_candidates(int r, int max_part);

/// Z(S_{z,lam,w1,w2}) = z^rho phi_{w1}(z; varpi^{-lam} w2) over all w1, w2 and
/// all w2-almost-dominant lam with lam+rho parts <= max_parts.
VerifyReport check_coloredwhittaker(int r, int max_parts);

/// The parahoric suite: lattice-model equality, the closed Casselman-Shalika
/// form, the divisibility/invariance and recursion propositions, and the
/// T_w transport of psi^J_1, for every J.
VerifyReport check_parahoric(int r, int max_parts);

/// One-color systems reproduce the deformed-denominator Schur product.
VerifyReport check_tokuyama(int max_r, int max_parts);

/// z^rho times Li's value equals the Hall-Littlewood polynomial at t = v^{-1}.
VerifyReport check_hall_littlewood(int max_r, int max_parts);

/// Strict/nonstrict splitting of the color-refined union of systems.
VerifyReport check_strict_reduction_sweep(int r, int max_parts);

} // namespace whitlat

#endif
