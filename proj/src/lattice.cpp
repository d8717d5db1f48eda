#include "whitlat/lattice.hpp"

#include "whitlat/render.hpp"

#include <algorithm>
#include <sstream>

namespace whitlat {

ColorSet::ColorSet(std::vector<int> colors) : colors_(std::move(colors)) {
    std::sort(colors_.begin(), colors_.end());
    for (size_t i = 0; i + 1 < colors_.size(); ++i)
        if (colors_[i] == colors_[i + 1])
            throw std::invalid_argument("vertical edge carries a repeated color");
    for (int c : colors_)
        if (c <= 0) throw std::invalid_argument("colors are positive integers");
}

bool ColorSet::contains(int c) const {
    return std::binary_search(colors_.begin(), colors_.end(), c);
}

ColorSet ColorSet::with(int c) const {
    ColorSet out = *this;
    auto it = std::lower_bound(out.colors_.begin(), out.colors_.end(), c);
    if (it != out.colors_.end() && *it == c)
        throw std::invalid_argument("color already present");
    out.colors_.insert(it, c);
    return out;
}

ColorSet ColorSet::without(int c) const {
    ColorSet out = *this;
    auto it = std::lower_bound(out.colors_.begin(), out.colors_.end(), c);
    if (it == out.colors_.end() || *it != c)
        throw std::invalid_argument("color not present");
    out.colors_.erase(it);
    return out;
}

int ColorSet::count_less(int c) const {
    return static_cast<int>(std::lower_bound(colors_.begin(), colors_.end(), c) -
                            colors_.begin());
}

int ColorSet::count_greater(int c) const {
    return static_cast<int>(colors_.end() -
                            std::upper_bound(colors_.begin(), colors_.end(), c));
}

int ColorSet::count_between(int lo, int hi) const {
    if (lo >= hi) return 0;
    return static_cast<int>(std::lower_bound(colors_.begin(), colors_.end(), hi) -
                            std::upper_bound(colors_.begin(), colors_.end(), lo));
}

namespace {

// (-v)^k and v^k as rank-`rank` polynomials.
LaurentPoly pow_v(int rank, int k) { return LaurentPoly::v(rank, k); }

LaurentPoly pow_neg_v(int rank, int k) {
    return LaurentPoly::v(rank, k).scaled(k % 2 == 0 ? 1 : -1);
}

LaurentPoly one_minus_v(int rank) {
    return LaurentPoly::constant(rank, 1) - LaurentPoly::v(rank, 1);
}

} // namespace

LaurentPoly fused_weight(int rank, int row_var, const VertexConfig& cfg) {
    const LaurentPoly zero(rank);
    const LaurentPoly zi = LaurentPoly::z(rank, row_var);
    const auto& [a, top, b, bottom] = cfg;

    if (a == kPlus && b == kPlus) {
        if (!(top == bottom)) return zero;
        return pow_neg_v(rank, top.size());
    }
    if (a != kPlus && b == a) {
        if (!(top == bottom)) return zero;
        return zi * pow_v(rank, top.count_greater(a));
    }
    if (a == kPlus && b != kPlus) {
        // color b exits right: bottom = top - b
        if (!top.contains(b) || !(bottom == top.without(b))) return zero;
        return pow_neg_v(rank, top.count_less(b)) * pow_v(rank, top.count_greater(b));
    }
    if (a != kPlus && b == kPlus) {
        // color a joins the column: bottom = top + a
        if (top.contains(a) || !(bottom == top.with(a))) return zero;
        return one_minus_v(rank) * zi * pow_neg_v(rank, top.count_greater(a));
    }
    // a and b are distinct colors; admissible only when a < b.
    if (top.contains(a) || !top.contains(b)) return zero;
    if (!(bottom == top.with(a).without(b))) return zero;
    if (a > b) return zero;
    return one_minus_v(rank) * zi * pow_neg_v(rank, top.count_between(a, b)) *
           pow_v(rank, top.count_greater(b));
}

LaurentPoly monochrome_weight(int rank, int row_var, int vertex_color,
                              const VertexConfig& cfg) {
    const auto& [a, top, b, bottom] = cfg;
    const int c = vertex_color;
    for (const ColorSet* s : {&cfg.top, &cfg.bottom})
        if (s->size() > 1 || (s->size() == 1 && !s->contains(c)))
            throw std::invalid_argument("monochrome vertical spin carries a foreign color");

    const LaurentPoly zero(rank);
    const LaurentPoly zi = LaurentPoly::z(rank, row_var);
    const bool t = top.contains(c), d = bottom.contains(c);

    if (a == kPlus && b == kPlus) {
        if (!t && !d) return LaurentPoly::constant(rank, 1);
        if (t && d) return -LaurentPoly::v(rank, 1);
        return zero;
    }
    if (a != kPlus && b == a) {
        if (t != d) return zero;
        if (!t) return a == c ? zi : LaurentPoly::constant(rank, 1);
        if (a == c) return zi;
        return c > a ? LaurentPoly::v(rank, 1) : LaurentPoly::constant(rank, 1);
    }
    if (a == c && b == kPlus && !t && d) return one_minus_v(rank) * zi;
    if (a == kPlus && b == c && t && !d) return LaurentPoly::constant(rank, 1);
    return zero;
}

LaurentPoly r_weight(int rank, int var_i, int var_j, const RConfig& cfg) {
    const LaurentPoly zero(rank);
    const LaurentPoly zi = LaurentPoly::z(rank, var_i);
    const LaurentPoly zj = LaurentPoly::z(rank, var_j);
    const LaurentPoly vv = LaurentPoly::v(rank, 1);
    const auto& [sw, nw, ne, se] = cfg;

    if (sw == kPlus && nw == kPlus && ne == kPlus && se == kPlus) return zj - vv * zi;
    if (sw != kPlus && sw == nw && nw == ne && ne == se) return zi - vv * zj;
    if (sw == ne && nw == se && sw != nw) {
        // colors (or a color and +) cross
        if (sw == kPlus) return vv * (zi - zj); // (+,c,+,c)
        if (nw == kPlus) return zi - zj;        // (c,+,c,+)
        return sw > nw ? zi - zj : vv * (zi - zj);
    }
    if (sw == se && nw == ne && sw != nw) {
        // each keeps its row
        if (sw == kPlus) return one_minus_v(rank) * zj; // (+,c,c,+)
        if (nw == kPlus) return one_minus_v(rank) * zi; // (c,+,+,c)
        return sw < nw ? one_minus_v(rank) * zi : one_minus_v(rank) * zj;
    }
    return zero;
}

LaurentPoly aux_r_weight(int rank, int var_i, int var_j, int vertex_color, const RConfig& cfg) {
    const LaurentPoly zero(rank);
    const LaurentPoly zi = LaurentPoly::z(rank, var_i);
    const LaurentPoly zj = LaurentPoly::z(rank, var_j);
    const LaurentPoly vv = LaurentPoly::v(rank, 1);
    const int c = vertex_color;
    const auto& [sw, nw, ne, se] = cfg;

    if (sw == kPlus && nw == kPlus && ne == kPlus && se == kPlus) return zj - vv * zi;
    if (sw != kPlus && sw == nw && nw == ne && ne == se) return zi - vv * zj; // c = d allowed
    if (sw == ne && nw == se && sw != nw) {
        // crossing; c = d or c = e allowed
        if (sw == kPlus) return vv * (zi - zj);
        if (nw == kPlus) return zi - zj;
        return sw > nw ? zi - zj : vv * (zi - zj);
    }
    if (sw == se && nw == ne && sw != nw) {
        // row-preserving; depends on the cyclic order of {vertex color, d, e}
        const int d = sw, e = nw;
        if (sw == kPlus) return one_minus_v(rank) * zj; // c = d allowed
        if (nw == kPlus) return one_minus_v(rank) * zi; // c = d allowed
        if (e == c) return one_minus_v(rank) * zj;
        if (d == c) return one_minus_v(rank) * zi;
        if ((e > c && c > d) || (c > d && d > e) || (d > e && e > c))
            return one_minus_v(rank) * zj;
        return one_minus_v(rank) * zi;
    }
    return zero;
}

std::vector<int> standard_flag(int r) {
    std::vector<int> flag(r);
    for (int i = 0; i < r; ++i) flag[i] = r - i;
    return flag;
}

std::vector<int> flag_for_parabolic(const ParabolicSubset& J, int r) {
    // Count the J-blocks, then color block b with k+1-b.
    std::vector<int> block_of(r + 1, 0);
    int k = 0;
    for (int i = 1; i <= r; ++i) {
        if (i == 1 || !J.count(i - 1)) ++k;
        block_of[i] = k;
    }
    std::vector<int> flag(r);
    for (int i = 1; i <= r; ++i) flag[i - 1] = k + 1 - block_of[i];
    return flag;
}

ParabolicSubset flag_stabilizer(const std::vector<int>& flag) {
    ParabolicSubset J;
    for (size_t i = 0; i + 1 < flag.size(); ++i)
        if (flag[i] == flag[i + 1]) J.insert(static_cast<int>(i) + 1);
    return J;
}

SystemSpec build_system(int r, const WeightVec& lam, const Permutation& w1,
                        const Permutation& w2, std::vector<int> flag, int N,
                        LatticeMode mode) {
    if (static_cast<int>(lam.size()) != r || w1.degree() != r || w2.degree() != r)
        throw std::invalid_argument("system dimension mismatch");
    if (lam.back() < 0) throw std::invalid_argument("lambda_r must be nonnegative");
    if (flag.empty()) flag = standard_flag(r);
    if (static_cast<int>(flag.size()) != r) throw std::invalid_argument("flag length mismatch");
    for (int i = 0; i + 1 < r; ++i)
        if (flag[i] < flag[i + 1])
            throw std::invalid_argument("flag must be weakly decreasing");
    const ParabolicSubset J = flag_stabilizer(flag);
    if (!is_min_coset_rep(w1, J)) throw std::invalid_argument("w1 is not in W^J");

    SystemSpec spec;
    spec.r = r;
    spec.lam = lam;
    spec.w1 = w1;
    spec.w2 = w2;
    spec.flag = flag;
    spec.mode = mode;
    spec.N = (N < 0) ? lam[0] + r - 1 : N;
    if (spec.N < lam[0] + r - 1)
        throw std::invalid_argument("N must be at least lambda_1 + r - 1");
    spec.almost_dominant = is_w_almost_dominant(lam, w2);

    const Permutation w1inv = w1.inverse();
    const Permutation w2inv = w2.inverse();
    spec.top_by_column.assign(spec.N + 1, ColorSet());
    for (int i = 1; i <= r; ++i) {
        const int col = lam[i - 1] + r - i;
        const int color = flag[w2inv(i) - 1];
        if (spec.top_by_column[col].contains(color))
            throw std::invalid_argument("duplicate color on a top boundary edge");
        spec.top_by_column[col] = spec.top_by_column[col].with(color);
    }
    spec.right_by_row.resize(r);
    for (int i = 1; i <= r; ++i) spec.right_by_row[i - 1] = flag[w1inv(i) - 1];
    return spec;
}

namespace {

struct Completion {
    HorizSpin right;
    ColorSet bottom;
    LaurentPoly weight;
};

// Admissible (right, bottom) pairs of a fused vertex given (left, top).
std::vector<Completion> fused_completions(int rank, int row_var, HorizSpin a,
                                          const ColorSet& top) {
    std::vector<Completion> out;
    const LaurentPoly zi = LaurentPoly::z(rank, row_var);
    if (a == kPlus) {
        out.push_back({kPlus, top, pow_neg_v(rank, top.size())});
        for (int c : top.colors())
            out.push_back({c, top.without(c),
                           pow_neg_v(rank, top.count_less(c)) *
                               pow_v(rank, top.count_greater(c))});
        return out;
    }
    out.push_back({a, top, zi * pow_v(rank, top.count_greater(a))});
    if (!top.contains(a)) {
        out.push_back({kPlus, top.with(a),
                       one_minus_v(rank) * zi * pow_neg_v(rank, top.count_greater(a))});
        for (int d : top.colors()) {
            if (d <= a) continue;
            out.push_back({d, top.with(a).without(d),
                           one_minus_v(rank) * zi * pow_neg_v(rank, top.count_between(a, d)) *
                               pow_v(rank, top.count_greater(d))});
        }
    }
    return out;
}

std::vector<Completion> monochrome_completions(int rank, int row_var, int c, HorizSpin a,
                                               const ColorSet& top) {
    std::vector<Completion> out;
    const LaurentPoly one = LaurentPoly::constant(rank, 1);
    const LaurentPoly zi = LaurentPoly::z(rank, row_var);
    const bool t = !top.empty();
    if (a == kPlus) {
        if (!t) {
            out.push_back({kPlus, top, one});
        } else {
            out.push_back({kPlus, top, -LaurentPoly::v(rank, 1)});
            out.push_back({c, ColorSet(), one});
        }
        return out;
    }
    if (!t) {
        out.push_back({a, top, a == c ? zi : one});
        if (a == c) out.push_back({kPlus, ColorSet({c}), one_minus_v(rank) * zi});
    } else {
        LaurentPoly w = a == c ? zi : (c > a ? LaurentPoly::v(rank, 1) : one);
        out.push_back({a, top, std::move(w)});
    }
    return out;
}

std::vector<Completion> completions(const SystemSpec& spec, int grid_col, int row,
                                    HorizSpin a, const ColorSet& top) {
    if (spec.mode == LatticeMode::Fused)
        return fused_completions(spec.r, row, a, top);
    return monochrome_completions(spec.r, row, spec.column_color(grid_col), a, top);
}

struct Enumerator {
    const SystemSpec& spec;
    const std::function<void(const LatticeState&)>& fn;
    int cols;
    std::vector<ColorSet> verticals; // current inputs from above, per grid column
    std::vector<VertexConfig> cells;
    std::vector<LaurentPoly> weights; // running products, one per vertex

    void run() {
        cols = spec.grid_cols();
        verticals.resize(cols);
        for (int j = 0; j < cols; ++j) {
            if (spec.mode == LatticeMode::Fused) {
                verticals[j] = spec.top_by_column[spec.N - j];
            } else {
                const int col = spec.N - j / spec.r;
                const int c = spec.column_color(j);
                verticals[j] = spec.top_by_column[col].contains(c) ? ColorSet({c}) : ColorSet();
            }
        }
        cells.resize(static_cast<size_t>(spec.r) * cols);
        weights.assign(cells.size() + 1, LaurentPoly::constant(spec.r, 1));
        descend(1, 0, kPlus);
    }

    void descend(int row, int j, HorizSpin carried) {
        if (j == cols) {
            if (row == spec.r) {
                LatticeState st{cells, weights[cells.size()]};
                fn(st);
                return;
            }
            descend(row + 1, 0, kPlus);
            return;
        }
        const size_t t = static_cast<size_t>(row - 1) * cols + j;
        const ColorSet top = verticals[j];
        for (const Completion& comp : completions(spec, j, row, carried, top)) {
            // the rightmost edge must match the boundary; the bottom row must
            // close with empty vertical spins
            if (j == cols - 1 && comp.right != spec.right_by_row[row - 1]) continue;
            if (row == spec.r && !comp.bottom.empty()) continue;
            cells[t] = {carried, top, comp.right, comp.bottom};
            weights[t + 1] = weights[t] * comp.weight;
            verticals[j] = comp.bottom;
            descend(row, j + 1, comp.right);
            verticals[j] = top;
        }
    }
};

} // namespace

void for_each_state(const SystemSpec& spec,
                    const std::function<void(const LatticeState&)>& fn) {
    Enumerator e{spec, fn};
    e.run();
}

std::vector<LatticeState> enumerate_states(const SystemSpec& spec) {
    std::vector<LatticeState> out;
    for_each_state(spec, [&](const LatticeState& st) { out.push_back(st); });
    return out;
}

LaurentPoly partition_function(const SystemSpec& spec) {
    if (!spec.almost_dominant) return LaurentPoly::zero(spec.r);
    LaurentPoly z(spec.r);
    for_each_state(spec, [&](const LatticeState& st) { z += st.weight; });
    return z;
}

nlohmann::json state_to_json(const SystemSpec& spec, const LatticeState& state) {
    nlohmann::json j;
    j["rows"] = spec.r;
    j["cols"] = spec.grid_cols();
    nlohmann::json cells = nlohmann::json::array();
    for (int row = 1; row <= spec.r; ++row) {
        for (int col = 0; col < spec.grid_cols(); ++col) {
            const VertexConfig& c = state.cells[(row - 1) * spec.grid_cols() + col];
            nlohmann::json cell;
            cell["row"] = row;
            cell["col"] = col;
            cell["left"] = c.left;
            cell["right"] = c.right;
            cell["top"] = c.top.colors();
            cell["bottom"] = c.bottom.colors();
            const LaurentPoly w =
                spec.mode == LatticeMode::Fused
                    ? fused_weight(spec.r, row, c)
                    : monochrome_weight(spec.r, row, spec.column_color(col), c);
            cell["weight"] = to_json(w);
            cells.push_back(cell);
        }
    }
    j["cells"] = cells;
    j["weight"] = to_json(state.weight);
    return j;
}

// ---------------------------------------------------------------------------
// Yang-Baxter checks.  Both sides of the equation are little three-vertex
// systems; the boundary is (a, b, c, d, e, f) with a, b entering on the left
// (a below b), c on top of the column, d, e exiting on the right (d above e)
// and f below the column.  The SW strand carries the first R parameter.

namespace {

struct YbeSide {
    LaurentPoly value{2};
};

// Ordinary-vertex weight dispatch for the YBE harness (rank 2, P1 = z1, P2 = z2).
using OrdinaryWeight = std::function<LaurentPoly(int param_var, const VertexConfig&)>;
using RWeight = std::function<LaurentPoly(const RConfig&)>;

LaurentPoly ybe_lhs(const std::vector<HorizSpin>& hspins,
                    const std::vector<ColorSet>& vspins, const OrdinaryWeight& ow,
                    const RWeight& rw, HorizSpin a, HorizSpin b, const ColorSet& c,
                    HorizSpin d, HorizSpin e, const ColorSet& f) {
    LaurentPoly total(2);
    for (HorizSpin alpha : hspins) {
        for (HorizSpin beta : hspins) {
            const LaurentPoly w_r = rw({a, b, alpha, beta});
            if (w_r.is_zero()) continue;
            for (const ColorSet& g : vspins) {
                const LaurentPoly w_top = ow(1, {alpha, c, d, g});
                if (w_top.is_zero()) continue;
                const LaurentPoly w_bot = ow(2, {beta, g, e, f});
                if (w_bot.is_zero()) continue;
                total += w_r * w_top * w_bot;
            }
        }
    }
    return total;
}

LaurentPoly ybe_rhs(const std::vector<HorizSpin>& hspins,
                    const std::vector<ColorSet>& vspins, const OrdinaryWeight& ow,
                    const RWeight& rw, HorizSpin a, HorizSpin b, const ColorSet& c,
                    HorizSpin d, HorizSpin e, const ColorSet& f) {
    LaurentPoly total(2);
    for (HorizSpin alpha : hspins) {
        for (HorizSpin beta : hspins) {
            const LaurentPoly w_r = rw({beta, alpha, d, e});
            if (w_r.is_zero()) continue;
            for (const ColorSet& g : vspins) {
                const LaurentPoly w_top = ow(2, {b, c, alpha, g});
                if (w_top.is_zero()) continue;
                const LaurentPoly w_bot = ow(1, {a, g, beta, f});
                if (w_bot.is_zero()) continue;
                total += w_r * w_top * w_bot;
            }
        }
    }
    return total;
}

std::string describe_boundary(HorizSpin a, HorizSpin b, const ColorSet& c, HorizSpin d,
                              HorizSpin e, const ColorSet& f) {
    auto hs = [](HorizSpin s) { return s == kPlus ? std::string("+") : std::to_string(s); };
    auto vs = [](const ColorSet& s) {
        if (s.empty()) return std::string("{}");
        std::string out = "{";
        for (size_t i = 0; i < s.colors().size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s.colors()[i]);
        }
        return out + "}";
    };
    std::ostringstream os;
    os << "a=" << hs(a) << " b=" << hs(b) << " c=" << vs(c) << " d=" << hs(d)
       << " e=" << hs(e) << " f=" << vs(f);
    return os.str();
}

VerifyReport run_ybe(const std::vector<HorizSpin>& hspins,
                     const std::vector<ColorSet>& vspins, const OrdinaryWeight& ow,
                     const RWeight& rw_left, const RWeight& rw_right) {
    VerifyReport report;
    for (HorizSpin a : hspins)
        for (HorizSpin b : hspins)
            for (const ColorSet& c : vspins)
                for (HorizSpin d : hspins)
                    for (HorizSpin e : hspins)
                        for (const ColorSet& f : vspins) {
                            const LaurentPoly lhs =
                                ybe_lhs(hspins, vspins, ow, rw_left, a, b, c, d, e, f);
                            const LaurentPoly rhs =
                                ybe_rhs(hspins, vspins, ow, rw_right, a, b, c, d, e, f);
                            ++report.cases_checked;
                            if (lhs != rhs) {
                                report.pass = false;
                                report.counterexample = describe_boundary(a, b, c, d, e, f);
                                return report;
                            }
                        }
    return report;
}

std::vector<ColorSet> all_subsets(int r) {
    std::vector<ColorSet> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> cs;
        for (int c = 1; c <= r; ++c)
            if (mask & (1 << (c - 1))) cs.push_back(c);
        out.push_back(ColorSet(cs));
    }
    return out;
}

} // namespace

VerifyReport verify_fused_ybe(int r) {
    std::vector<HorizSpin> hspins{kPlus};
    for (int c = 1; c <= r; ++c) hspins.push_back(c);
    const std::vector<ColorSet> vspins = all_subsets(r);
    const OrdinaryWeight ow = [](int param_var, const VertexConfig& cfg) {
        return fused_weight(2, param_var, cfg);
    };
    const RWeight rw = [](const RConfig& cfg) { return r_weight(2, 1, 2, cfg); };
    return run_ybe(hspins, vspins, ow, rw, rw);
}

VerifyReport verify_monochrome_ybe(int r) {
    std::vector<HorizSpin> hspins{kPlus};
    for (int c = 1; c <= r; ++c) hspins.push_back(c);
    VerifyReport total;
    for (int c = 1; c <= r; ++c) {
        const std::vector<ColorSet> vspins{ColorSet(), ColorSet({c})};
        const OrdinaryWeight ow = [c](int param_var, const VertexConfig& cfg) {
            return monochrome_weight(2, param_var, c, cfg);
        };
        const RWeight rw_left = [c](const RConfig& cfg) { return aux_r_weight(2, 1, 2, c, cfg); };
        const RWeight rw_right = [c, r](const RConfig& cfg) {
            if (c == r) return r_weight(2, 1, 2, cfg);
            return aux_r_weight(2, 1, 2, c + 1, cfg);
        };
        VerifyReport rep = run_ybe(hspins, vspins, ow, rw_left, rw_right);
        total.cases_checked += rep.cases_checked;
        if (!rep.pass) {
            rep.counterexample = "color " + std::to_string(c) + ": " + rep.counterexample;
            rep.cases_checked = total.cases_checked;
            return rep;
        }
    }
    return total;
}

VerifyReport verify_strict_reduction(int r, const ParabolicSubset& J, int m,
                                     const WeightVec& lam, const Permutation& w1,
                                     const Permutation& w2) {
    VerifyReport report;
    if (J.empty() || !J.count(m) || J.count(m + 1))
        throw std::invalid_argument("m must be the last index of a J-block");
    ParabolicSubset K = J;
    K.erase(m);

    // Flags with even colors so the split color c' = c - 1 fits in between.
    std::vector<int> flagJ = flag_for_parabolic(J, r);
    for (int& c : flagJ) c *= 2;
    const int c_split = flagJ[m - 1]; // block containing positions m, m+1
    std::vector<int> flagK = flagJ;
    flagK[m] = c_split - 1; // last slot of the block gets the new color

    const SystemSpec sysJ = build_system(r, lam, w1, w2, flagJ);
    LaurentPoly zJ(r);
    for_each_state(sysJ, [&](const LatticeState& st) { zJ += st.weight; });

    // Coset representatives of w1 W_J / W_K, chosen inside W^K.
    std::vector<Permutation> reps;
    for (const Permutation& y : subgroup_elements(J, r)) {
        const Permutation u = coset_decompose(w1 * y, K).first;
        if (std::find(reps.begin(), reps.end(), u) == reps.end()) reps.push_back(u);
    }

    LaurentPoly z_strict(r), z_nonstrict(r);
    for (const Permutation& u : reps) {
        const SystemSpec sysK = build_system(r, lam, u, w2, flagK);
        for_each_state(sysK, [&](const LatticeState& st) {
            bool strict = true;
            for (const VertexConfig& cell : st.cells) {
                if ((cell.top.contains(c_split) && cell.top.contains(c_split - 1)) ||
                    (cell.bottom.contains(c_split) && cell.bottom.contains(c_split - 1))) {
                    strict = false;
                    break;
                }
            }
            (strict ? z_strict : z_nonstrict) += st.weight;
            ++report.cases_checked;
        });
    }
    if (!(z_strict == zJ)) {
        report.pass = false;
        report.counterexample = "Z(strict) differs from Z(S^J)";
    } else if (!z_nonstrict.is_zero()) {
        report.pass = false;
        report.counterexample = "Z(nonstrict) is nonzero";
    }
    return report;
}

} // namespace whitlat
