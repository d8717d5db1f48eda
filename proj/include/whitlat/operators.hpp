#ifndef WHITLAT_OPERATORS_HPP
#define WHITLAT_OPERATORS_HPP

#include <utility>
#include <vector>

#include "whitlat/laurent.hpp"

namespace whitlat {

enum class OpTag { T, TInv, L, Partial, PartialCirc };

/// A divided-difference operator family.  The operator parameter is always
/// the ring's deformation variable, inverted when invert_v is set.
struct OperatorKind {
    OpTag tag = OpTag::T;
    bool invert_v = false;
};

/// Apply the operator indexed by the simple reflection s_i to f.
/// All interior divisions by z^{alpha_i} - 1 are exact; a NotDivisibleError
/// escaping from here indicates a bug, not bad input.
LaurentPoly apply(OperatorKind kind, int i, const LaurentPoly& f);

/// Apply a word of (index, sign) pairs, first element first.  Sign -1 selects
/// the inverse and is only defined for the T family.
LaurentPoly apply_word(OperatorKind kind, const std::vector<std::pair<int, int>>& word,
                       const LaurentPoly& f);

/// Apply T_{i_1} ... T_{i_k} for a reduced word of w (rightmost factor first).
LaurentPoly apply_for_element(OperatorKind kind, const Permutation& w, const LaurentPoly& f);

/// z^rho T_i z^{-rho}, the recursion operator for lattice partition functions.
LaurentPoly conjugated_T(int i, const LaurentPoly& f, bool inverse = false);

} // namespace whitlat

#endif
