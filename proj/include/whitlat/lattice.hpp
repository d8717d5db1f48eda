#ifndef WHITLAT_LATTICE_HPP
#define WHITLAT_LATTICE_HPP

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "whitlat/laurent.hpp"

namespace whitlat {

/// Horizontal edges carry one color or the + spin (0).
using HorizSpin = int;
constexpr HorizSpin kPlus = 0;

/// Vertical edges carry a set of distinct colors; empty = +.
class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(std::vector<int> colors);

    bool empty() const { return colors_.empty(); }
    int size() const { return static_cast<int>(colors_.size()); }
    bool contains(int c) const;
    ColorSet with(int c) const;
    ColorSet without(int c) const;
    int count_less(int c) const;
    int count_greater(int c) const;
    int count_between(int lo, int hi) const; // strictly between
    const std::vector<int>& colors() const { return colors_; }

    bool operator==(const ColorSet& rhs) const { return colors_ == rhs.colors_; }
    bool operator!=(const ColorSet& rhs) const { return colors_ != rhs.colors_; }
    bool operator<(const ColorSet& rhs) const { return colors_ < rhs.colors_; }

private:
    std::vector<int> colors_; // sorted ascending
};

/// Spins at an ordinary vertex: left and right horizontal, top and bottom
/// vertical.
struct VertexConfig {
    HorizSpin left = kPlus;
    ColorSet top;
    HorizSpin right = kPlus;
    ColorSet bottom;
};

/// Spins at an R-vertex (all horizontal), by compass position.
struct RConfig {
    HorizSpin sw = kPlus;
    HorizSpin nw = kPlus;
    HorizSpin ne = kPlus;
    HorizSpin se = kPlus;
};

/// Boltzmann weight of a fused ordinary vertex in row variable z_{row_var};
/// zero for inadmissible configurations.
LaurentPoly fused_weight(int rank, int row_var, const VertexConfig& cfg);

/// Monochrome ordinary vertex of a given color; vertical spins may carry that
/// color only.
LaurentPoly monochrome_weight(int rank, int row_var, int vertex_color, const VertexConfig& cfg);

/// Colored R-vertex weight; var_i is the parameter of the strand incident at
/// the SW corner.
LaurentPoly r_weight(int rank, int var_i, int var_j, const RConfig& cfg);

/// R-vertex for the auxiliary Yang-Baxter equations, labeled by a color.
LaurentPoly aux_r_weight(int rank, int var_i, int var_j, int vertex_color, const RConfig& cfg);

enum class LatticeMode { Fused, Monochrome };

/// Boundary data for an Iwahori or parahoric system.
struct SystemSpec {
    int r = 1;
    WeightVec lam;
    Permutation w1{1};
    Permutation w2{1};
    std::vector<int> flag; // weakly decreasing, length r
    int N = 0;             // columns numbered N..0, left to right
    LatticeMode mode = LatticeMode::Fused;

    std::vector<ColorSet> top_by_column; // index = column number 0..N
    std::vector<int> right_by_row;       // index = row-1
    bool almost_dominant = true;         // lam is w2-almost dominant

    int grid_cols() const { return mode == LatticeMode::Fused ? N + 1 : r * (N + 1); }
    /// Vertex color of internal grid column j (monochrome mode only).
    int column_color(int j) const { return j % r + 1; }
};

/// Standard flag (r, r-1, ..., 1).
std::vector<int> standard_flag(int r);
/// Weakly decreasing flag whose stabilizer is W_J: block b of the J-block
/// decomposition gets color k+1-b.
std::vector<int> flag_for_parabolic(const ParabolicSubset& J, int r);
/// Index set J stabilizing the flag.
ParabolicSubset flag_stabilizer(const std::vector<int>& flag);

/// Assemble the boundary data.  An empty flag means the standard flag; N < 0
/// selects the default lam_1 + r - 1.
SystemSpec build_system(int r, const WeightVec& lam, const Permutation& w1,
                        const Permutation& w2, std::vector<int> flag = {}, int N = -1,
                        LatticeMode mode = LatticeMode::Fused);

/// A full admissible spin assignment: one VertexConfig per grid vertex in
/// reading order (row by row, left to right), with its total weight.
struct LatticeState {
    std::vector<VertexConfig> cells;
    LaurentPoly weight;
};

std::vector<LatticeState> enumerate_states(const SystemSpec& spec);

/// Visit each admissible state without materializing them all.
void for_each_state(const SystemSpec& spec,
                    const std::function<void(const LatticeState&)>& fn);

/// Sum of state weights; identically zero when the spec is flagged as not
/// w2-almost dominant (the Whittaker value it represents vanishes).
LaurentPoly partition_function(const SystemSpec& spec);

nlohmann::json state_to_json(const SystemSpec& spec, const LatticeState& state);

// ---------------------------------------------------------------------------
// Symbolic verifications

struct VerifyReport {
    bool pass = true;
    long cases_checked = 0;
    std::string counterexample;
};

/// Yang-Baxter equation for the fused model, all boundary spins, palette size r.
VerifyReport verify_fused_ybe(int r);

/// Auxiliary Yang-Baxter equations for the monochrome model: R^(c) on the
/// left, R^(c+1) on the right (R^(r+1) = R), for every color c.
VerifyReport verify_monochrome_ybe(int r);

/// Color-splitting reduction: the union of K-systems over W_J/W_K splits into
/// strict states summing to Z of the J-system and nonstrict states summing to
/// zero.  m must be the last index of a J-block.
VerifyReport verify_strict_reduction(int r, const ParabolicSubset& J, int m,
                                     const WeightVec& lam, const Permutation& w1,
                                     const Permutation& w2);

} // namespace whitlat

#endif
