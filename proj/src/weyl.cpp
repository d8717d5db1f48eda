#include "whitlat/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace whitlat {

Permutation::Permutation(int degree) : images_(degree) {
    if (degree < 1) throw std::invalid_argument("permutation degree must be positive");
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(n, false);
    for (int x : images_) {
        if (x < 1 || x > n || seen[x - 1])
            throw std::invalid_argument("not a permutation of 1..r");
        seen[x - 1] = true;
    }
}

Permutation Permutation::simple(int degree, int i) {
    if (i < 1 || i >= degree) throw std::invalid_argument("simple reflection index out of range");
    Permutation s(degree);
    std::swap(s.images_[i - 1], s.images_[i]);
    return s;
}

Permutation Permutation::longest(int degree) {
    std::vector<int> img(degree);
    for (int i = 0; i < degree; ++i) img[i] = degree - i;
    return Permutation(img);
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 1; i <= degree(); ++i) img[images_[i - 1] - 1] = i;
    return Permutation(img);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> img(images_.size());
    for (int i = 1; i <= degree(); ++i) img[i - 1] = images_[rhs.images_[i - 1] - 1];
    return Permutation(img);
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[i - 1] != i) return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

std::string Permutation::to_string() const {
    std::string out;
    for (int i = 0; i < degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i]);
    }
    return out;
}

bool is_left_ascent(const Permutation& w, int i) {
    const Permutation winv = w.inverse();
    return winv(i) < winv(i + 1);
}

std::set<int> left_ascents(const Permutation& w) {
    std::set<int> out;
    const Permutation winv = w.inverse();
    for (int i = 1; i < w.degree(); ++i)
        if (winv(i) < winv(i + 1)) out.insert(i);
    return out;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    Permutation u = w;
    while (!u.is_identity()) {
        const Permutation uinv = u.inverse();
        int i = 0;
        for (int k = 1; k < u.degree(); ++k) {
            if (uinv(k) > uinv(k + 1)) { i = k; break; }
        }
        word.push_back(i);
        u = Permutation::simple(u.degree(), i) * u;
    }
    return word;
}

namespace {

bool bruhat_leq_impl(const Permutation& u, const Permutation& w) {
    if (u.degree() != w.degree()) throw std::invalid_argument("degree mismatch");
    if (w.is_identity()) return u.is_identity();
    // Pick a left descent i of w.  Lifting property:
    //   u <= w  iff  min(u, s_i u) <= s_i w.
    const Permutation winv = w.inverse();
    int i = 0;
    for (int k = 1; k < w.degree(); ++k)
        if (winv(k) > winv(k + 1)) { i = k; break; }
    const Permutation si = Permutation::simple(w.degree(), i);
    const Permutation sw = si * w;
    const Permutation su = si * u;
    if (su.length() < u.length()) return bruhat_leq_impl(su, sw);
    return bruhat_leq_impl(u, sw);
}

} // namespace

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    return bruhat_leq_impl(u, w);
}

std::vector<Permutation> all_permutations(int r) {
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

WeightVec rho(int r) {
    WeightVec out(r);
    for (int i = 0; i < r; ++i) out[i] = r - 1 - i;
    return out;
}

WeightVec add(const WeightVec& a, const WeightVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
    WeightVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

WeightVec negate(const WeightVec& a) {
    WeightVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

WeightVec apply_perm(const Permutation& w, const WeightVec& mu) {
    if (static_cast<int>(mu.size()) != w.degree())
        throw std::invalid_argument("weight length mismatch");
    const Permutation winv = w.inverse();
    WeightVec out(mu.size());
    for (int i = 1; i <= w.degree(); ++i) out[i - 1] = mu[winv(i) - 1];
    return out;
}

bool is_dominant(const WeightVec& lam) {
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) return false;
    return true;
}

bool is_w_almost_dominant(const WeightVec& lam, const Permutation& w) {
    if (static_cast<int>(lam.size()) != w.degree())
        throw std::invalid_argument("weight length mismatch");
    const Permutation winv = w.inverse();
    for (int i = 1; i < w.degree(); ++i) {
        const int pairing = lam[i - 1] - lam[i];
        const int threshold = (winv(i) < winv(i + 1)) ? 0 : -1;
        if (pairing < threshold) return false;
    }
    return true;
}

std::pair<Permutation, WeightVec> normalize_to_almost_dominant(const WeightVec& mu) {
    const int r = static_cast<int>(mu.size());
    // Stable sort the positions by decreasing value; among equal values the
    // later position sorts first, which makes w the longest sorting element.
    std::vector<int> pos(r);
    std::iota(pos.begin(), pos.end(), 0);
    std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
        if (mu[a] != mu[b]) return mu[a] > mu[b];
        return a > b;
    });
    // pos[i] = the position of mu landing at sorted slot i+1, i.e. w(pos[i]+1) = i+1.
    std::vector<int> img(r);
    for (int i = 0; i < r; ++i) img[pos[i]] = i + 1;
    Permutation w{img};
    WeightVec sorted(r);
    for (int i = 0; i < r; ++i) sorted[i] = mu[pos[i]];
    const WeightVec lam = add(sorted, negate(rho(r)));
    return {w, lam};
}

bool in_parabolic(const Permutation& w, const ParabolicSubset& J) {
    const int r = w.degree();
    for (int i = 1; i <= r; ++i) {
        int lo = i, hi = i;
        while (lo > 1 && J.count(lo - 1)) --lo;
        while (hi < r && J.count(hi)) ++hi;
        if (w(i) < lo || w(i) > hi) return false;
    }
    return true;
}

std::vector<Permutation> subgroup_elements(const ParabolicSubset& J, int r) {
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(r))
        if (in_parabolic(w, J)) out.push_back(w);
    return out;
}

bool is_min_coset_rep(const Permutation& w, const ParabolicSubset& J) {
    for (int j : J) {
        if (j < 1 || j >= w.degree()) throw std::invalid_argument("parabolic index out of range");
        if (w(j) > w(j + 1)) return false;
    }
    return true;
}

std::vector<Permutation> min_coset_reps(const ParabolicSubset& J, int r) {
    std::vector<Permutation> out;
    for (const Permutation& w : all_permutations(r))
        if (is_min_coset_rep(w, J)) out.push_back(w);
    return out;
}

std::pair<Permutation, Permutation> coset_decompose(const Permutation& w,
                                                    const ParabolicSubset& J) {
    Permutation wmin = w;
    Permutation wpar(w.degree());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j : J) {
            if (wmin(j) > wmin(j + 1)) {
                const Permutation sj = Permutation::simple(w.degree(), j);
                wmin = wmin * sj;
                wpar = sj * wpar;
                moved = true;
            }
        }
    }
    return {wmin, wpar};
}

Permutation longest_in_parabolic(const ParabolicSubset& J, int r) {
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 1);
    for (int i = 1; i <= r;) {
        int hi = i;
        while (hi < r && J.count(hi)) ++hi;
        for (int k = 0; k < hi - i + 1; ++k) img[i - 1 + k] = hi - k;
        i = hi + 1;
    }
    return Permutation(img);
}

std::vector<std::pair<int, int>> parabolic_positive_roots(const ParabolicSubset& J, int r) {
    std::vector<std::pair<int, int>> roots;
    for (int a = 1; a <= r; ++a) {
        int hi = a;
        while (hi < r && J.count(hi)) ++hi;
        for (int b = a + 1; b <= hi; ++b) roots.emplace_back(a, b);
    }
    return roots;
}

std::vector<std::pair<int, int>> weyl_path(const Permutation& w2, const Permutation& w1) {
    if (w1.degree() != w2.degree()) throw std::invalid_argument("degree mismatch");
    const std::vector<int> word = reduced_word(w1 * w2.inverse());
    std::vector<std::pair<int, int>> path;
    Permutation u = w2;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const Permutation su = Permutation::simple(u.degree(), *it) * u;
        path.emplace_back(*it, su.length() > u.length() ? +1 : -1);
        u = su;
    }
    return path;
}

} // namespace whitlat
