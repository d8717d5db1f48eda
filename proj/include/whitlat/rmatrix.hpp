#ifndef WHITLAT_RMATRIX_HPP
#define WHITLAT_RMATRIX_HPP

#include <map>
#include <string>

#include "whitlat/laurent.hpp"

namespace whitlat {

/// In this module the ring's deformation variable is read as the quantum
/// parameter q, and v enters the formulas only as q^2.

/// Element of the Iwahori fixed space in the standard basis, tagged with the
/// spectral tuple sigma(z) it lives at.
class IwahoriVector {
public:
    IwahoriVector(int r, Permutation tag);
    /// The basis vector Phi_w at the untwisted tuple z.
    static IwahoriVector phi(int r, const Permutation& w);

    int r() const { return r_; }
    const Permutation& tag() const { return tag_; }
    const std::map<Permutation, RationalFn>& coeffs() const { return coeffs_; }
    void add(const Permutation& w, const RationalFn& c);

    /// Structural-equality helper: same tag and cross-multiplied equal
    /// coefficients.
    bool equals(const IwahoriVector& rhs) const;

private:
    int r_;
    Permutation tag_;
    std::map<Permutation, RationalFn> coeffs_;
};

/// Coefficients on index tuples with entries in 1..r, tagged.  The Iwahori
/// picture lives on the alternating tuples (permutations of (1..r)); repeated
/// entries appear only in the parahoric extension of the colored R-matrix.
class TensorVector {
public:
    TensorVector(int r, Permutation tag);
    static TensorVector basis(int r, const std::vector<int>& tuple);

    int r() const { return r_; }
    const Permutation& tag() const { return tag_; }
    const std::map<std::vector<int>, RationalFn>& coeffs() const { return coeffs_; }
    void add(const std::vector<int>& tuple, const RationalFn& c);

    bool equals(const TensorVector& rhs) const;

private:
    int r_;
    Permutation tag_;
    std::map<std::vector<int>, RationalFn> coeffs_;
};

/// Normalized intertwiner A-bar_{s_k} acting at the vector's spectral tuple;
/// retags by s_k.
IwahoriVector intertwine(int k, const IwahoriVector& vec);

/// Phi_w -> u_{w(i_0)} with i_0 = (1,...,r) and w(i_0)_i = w^{-1}(i).
TensorVector theta_map(const IwahoriVector& vec);

/// Colored R-matrix on tensor slots k, k+1.  Alternating tuples stay
/// alternating; equal adjacent colors pass through with weight one.
TensorVector r_col_apply(int k, const TensorVector& vec);

/// Twisted Jimbo R-matrix -q R_q on slots k, k+1, with v = q^2; defined on
/// alternating tuples only.
TensorVector jimbo_r_apply(int k, const TensorVector& vec);

struct RVerifyReport {
    bool pass = true;
    long cases_checked = 0;
    std::string counterexample;
};

/// theta transports A-bar to R_col, and R_col matches -q R_q on alternating
/// tuples, for all basis vectors and all k.
RVerifyReport verify_commuting_diagram(int r);

/// A-bar_{s_k}^{s_k z} A-bar_{s_k}^z = id, and the compositions along two
/// reduced words of w0 agree.
RVerifyReport verify_cocycle(int r);

/// The Whittaker-functional factor (1 - v z^{-alpha_k})/(1 - v z^{alpha_k})
/// is the uncolored R-weight at (z_{k+1}, z_k) up to the monomial z_{k+1}/z_k.
RVerifyReport uncolored_factor_check(int r);

} // namespace whitlat

#endif
