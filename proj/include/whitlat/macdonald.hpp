#ifndef WHITLAT_MACDONALD_HPP
#define WHITLAT_MACDONALD_HPP

#include "whitlat/operators.hpp"

namespace whitlat {

/// Schur polynomial s_lambda via the Demazure character formula.
LaurentPoly schur(const WeightVec& lam, int r);

/// Character of the Levi subgroup for J with highest weight lambda.
LaurentPoly levi_character(const ParabolicSubset& J, const WeightVec& lam, int r);

/// Hall-Littlewood P_mu(z; t) for strictly decreasing mu, with t realized as
/// the ring's deformation variable.
LaurentPoly hall_littlewood(const WeightVec& mu, int r);

/// Weyl symmetrizer applied to z^lam; equals s_lambda for dominant lam.
LaurentPoly theta(const WeightVec& lam, int r);

/// Nonsymmetric Macdonald specialization E_nu(z; infinity, v) for a
/// composition nu with distinct nonnegative parts.
LaurentPoly e_inf(const WeightVec& nu, int r);

/// Sum over W_J of (-t)^{-l(w)} L_{w,t} z^eta at q = 0, with eta = lam + rho
/// dominant and t realized as the deformation variable.
LaurentPoly prescribed_symmetry_sum(const ParabolicSubset& J, const WeightVec& eta, int r);

} // namespace whitlat

#endif
