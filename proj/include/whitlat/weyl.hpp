#ifndef WHITLAT_WEYL_HPP
#define WHITLAT_WEYL_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whitlat {

/// An element of the symmetric group S_r in one-line notation.
/// Composition convention: (u*v)(i) = u(v(i)).
class Permutation {
public:
    explicit Permutation(int degree = 1);
    explicit Permutation(std::vector<int> images);

    /// The simple transposition s_i swapping i and i+1, 1 <= i < degree.
    static Permutation simple(int degree, int i);
    /// The longest element w0: i -> degree+1-i.
    static Permutation longest(int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;

    bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }
    bool operator!=(const Permutation& rhs) const { return images_ != rhs.images_; }
    bool operator<(const Permutation& rhs) const { return images_ < rhs.images_; }

    bool is_identity() const;
    /// Coxeter length = number of inversions of the one-line notation.
    int length() const;

    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// Indices i with l(s_i w) > l(w), i.e. w^{-1}(i) < w^{-1}(i+1).
std::set<int> left_ascents(const Permutation& w);
bool is_left_ascent(const Permutation& w, int i);

/// A reduced word [i_1,...,i_k] with w = s_{i_1} * ... * s_{i_k},
/// produced by repeatedly stripping the smallest left descent.
std::vector<int> reduced_word(const Permutation& w);

/// Bruhat order on S_r via the lifting-property recursion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// All r! elements, in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int r);

// ---------------------------------------------------------------------------
// Weights

/// Integer weight vector for GL_r; entry i is the exponent of z_i.
using WeightVec = std::vector<int>;

WeightVec rho(int r);
WeightVec add(const WeightVec& a, const WeightVec& b);
WeightVec negate(const WeightVec& a);
/// (w.mu)_i = mu_{w^{-1}(i)}.
WeightVec apply_perm(const Permutation& w, const WeightVec& mu);
bool is_dominant(const WeightVec& lam);

/// lam_i - lam_{i+1} >= 0 at left ascents of w and >= -1 elsewhere.
bool is_w_almost_dominant(const WeightVec& lam, const Permutation& w);

/// The unique pair (w, lam) with w(mu) = lam + rho weakly decreasing and lam
/// w-almost dominant; w is the longest permutation sorting mu.
std::pair<Permutation, WeightVec> normalize_to_almost_dominant(const WeightVec& mu);

// ---------------------------------------------------------------------------
// Parabolic subgroups

/// A subset of the simple-reflection indices {1,...,r-1}.
using ParabolicSubset = std::set<int>;

/// Elements of W_J, the subgroup generated by {s_j : j in J}.
std::vector<Permutation> subgroup_elements(const ParabolicSubset& J, int r);

/// Membership in W_J: w permutes positions within each J-block.
bool in_parabolic(const Permutation& w, const ParabolicSubset& J);

/// True iff w s_j > w for all j in J.
bool is_min_coset_rep(const Permutation& w, const ParabolicSubset& J);

/// Minimal-length coset representatives W^J, lexicographically ordered.
std::vector<Permutation> min_coset_reps(const ParabolicSubset& J, int r);

/// Unique factorization w = wmin * wpar with wmin in W^J, wpar in W_J and
/// additive lengths.
std::pair<Permutation, Permutation> coset_decompose(const Permutation& w,
                                                    const ParabolicSubset& J);

/// Longest element of W_J (block reversals).
Permutation longest_in_parabolic(const ParabolicSubset& J, int r);

/// Positive roots e_a - e_b of the Levi determined by J, as index pairs a < b.
std::vector<std::pair<int, int>> parabolic_positive_roots(const ParabolicSubset& J, int r);

/// A path of simple reflections from w2 to w1 by left multiplication.
/// Each step carries +1 if it increased length, -1 otherwise.
std::vector<std::pair<int, int>> weyl_path(const Permutation& w2, const Permutation& w1);

} // namespace whitlat

#endif
