#pragma once

#include "meyerlab/verify/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace meyerlab::verify {

template <class G>
struct GroupLess {
    const G* group;
    bool operator()(const typename G::Element& a, const typename G::Element& b) const { return group->less(a, b); }
};

template <class G>
using ElementSet = std::set<typename G::Element, GroupLess<G>>;

template <class G>
ElementSet<G> make_set(const G& g, const std::vector<typename G::Element>& xs) {
    return ElementSet<G>(xs.begin(), xs.end(), GroupLess<G>{&g});
}

// point a = translates[translate] * residual, residual in the comparison set.
template <class E>
struct CoverAssignment {
    std::size_t point;
    std::size_t translate;
    E residual;
};

// Patch-scope cover A subset F B with its pointwise evidence.
template <class E>
struct PatchCover {
    std::vector<E> translates;
    std::vector<CoverAssignment<E>> assignment;
    bool feasible = true;
    std::optional<E> witness;  // first point that needed an over-long translate
};

struct GreedyOptions {
    // Reject translates whose norm exceeds this bound (commensurability at scale).
    std::optional<Rational> translate_bound;
};

// Scans A by increasing norm (ties in canonical order). Each point reuses the
// first existing translate f with f^{-1} a in B; otherwise it adds
// f = a b^{-1} for the b in B nearest to a, so translates stay short.
template <CoverGroup G>
PatchCover<typename G::Element> greedy_cover(const G& g, const std::vector<typename G::Element>& A,
                                             const std::vector<typename G::Element>& B, const GreedyOptions& opts = {}) {
    using E = typename G::Element;
    PatchCover<E> cover;
    const auto bset = make_set(g, B);
    std::vector<E> border(bset.begin(), bset.end());

    std::vector<std::size_t> order(A.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norms;
    norms.reserve(A.size());
    for (const auto& a : A) norms.push_back(g.approx_norm(a));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (norms[i] != norms[j]) return norms[i] < norms[j];
        return g.less(A[i], A[j]);
    });

    for (std::size_t idx : order) {
        const E& a = A[idx];
        bool placed = false;
        for (std::size_t t = 0; t < cover.translates.size() && !placed; ++t) {
            E r = g.mul(g.inv(cover.translates[t]), a);
            if (bset.count(r)) {
                cover.assignment.push_back({idx, t, std::move(r)});
                placed = true;
            }
        }
        if (placed) continue;
        if (border.empty()) {
            cover.feasible = false;
            cover.witness = a;
            return cover;
        }
        std::optional<E> best;
        double best_norm = 0;
        const E* best_b = nullptr;
        for (const auto& b : border) {
            E f = g.mul(a, g.inv(b));
            double n = g.approx_norm(f);
            if (!best || n < best_norm) {
                best = std::move(f);
                best_norm = n;
                best_b = &b;
            }
        }
        if (opts.translate_bound && !g.norm_at_most(*best, *opts.translate_bound)) {
            cover.feasible = false;
            cover.witness = a;
            return cover;
        }
        cover.translates.push_back(*best);
        cover.assignment.push_back({idx, cover.translates.size() - 1, *best_b});
    }
    return cover;
}

// Exact replay: every point of A is assigned, translate * residual == point,
// and every residual lies in B.
template <CoverGroup G>
bool replay_cover(const G& g, const std::vector<typename G::Element>& A, const std::vector<typename G::Element>& B,
                  const PatchCover<typename G::Element>& cover) {
    if (!cover.feasible) return false;
    const auto bset = make_set(g, B);
    std::vector<char> seen(A.size(), 0);
    for (const auto& as : cover.assignment) {
        if (as.point >= A.size() || as.translate >= cover.translates.size()) return false;
        if (!bset.count(as.residual)) return false;
        auto prod = g.mul(cover.translates[as.translate], as.residual);
        if (g.less(prod, A[as.point]) || g.less(A[as.point], prod)) return false;
        seen[as.point] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// ---------------------------------------------------------------------------

template <class E>
struct CoverInput {
    std::vector<E> translates;  // F_i
    std::vector<E> target;      // Y_i
};

// X subset F'(Y_1^{-1}Y_1 cap ... cap Y_n^{-1}Y_n) with |F'| <= |F_1|...|F_n|.
template <class E>
struct CoverBoundWitness {
    std::vector<E> representatives;               // F'
    std::vector<std::vector<std::size_t>> cells;  // translate indices per representative
    std::vector<std::size_t> point_cell;          // cell of each x
    std::size_t bound = 1;                        // prod |F_i|
    bool inclusion_verified = false;
};

class CellCoverError : public std::runtime_error {
public:
    CellCoverError(std::size_t cover, std::string point)
        : std::runtime_error("point " + point + " is not covered by F_" + std::to_string(cover + 1) + " Y_" +
                             std::to_string(cover + 1)),
          cover_index(cover) {}
    std::size_t cover_index;
};

// Sorts X into the fibres of x -> (f_1, ..., f_n), where f_i is the first
// translate with f_i^{-1} x in Y_i, and keeps one representative per nonempty
// fibre. Within a fibre x^{-1} x' = y^{-1} y' for each i, which is re-checked
// against explicitly built Y_i^{-1} Y_i.
template <CoverGroup G>
CoverBoundWitness<typename G::Element> cell_cover(const G& g, const std::vector<typename G::Element>& X,
                                                  const std::vector<CoverInput<typename G::Element>>& covers) {
    using E = typename G::Element;
    CoverBoundWitness<E> w;
    std::vector<ElementSet<G>> targets;
    for (const auto& c : covers) {
        targets.push_back(make_set(g, c.target));
        w.bound *= c.translates.size();
    }
    std::map<std::vector<std::size_t>, std::size_t> cell_index;
    for (const auto& x : X) {
        std::vector<std::size_t> key;
        for (std::size_t i = 0; i < covers.size(); ++i) {
            std::size_t hit = covers[i].translates.size();
            for (std::size_t t = 0; t < covers[i].translates.size(); ++t) {
                if (targets[i].count(g.mul(g.inv(covers[i].translates[t]), x))) {
                    hit = t;
                    break;
                }
            }
            if (hit == covers[i].translates.size()) throw CellCoverError(i, g.format(x));
            key.push_back(hit);
        }
        auto [it, inserted] = cell_index.emplace(key, w.representatives.size());
        if (inserted) {
            w.representatives.push_back(x);
            w.cells.push_back(key);
        }
        w.point_cell.push_back(it->second);
    }
    if (w.representatives.size() > w.bound) throw std::logic_error("cell cover exceeded prod |F_i|");

    std::vector<ElementSet<G>> differences;
    for (const auto& c : covers) {
        ElementSet<G> d(GroupLess<G>{&g});
        for (const auto& y : c.target)
            for (const auto& y2 : c.target) d.insert(g.mul(g.inv(y), y2));
        differences.push_back(std::move(d));
    }
    w.inclusion_verified = true;
    for (std::size_t k = 0; k < X.size() && w.inclusion_verified; ++k) {
        E q = g.mul(g.inv(w.representatives[w.point_cell[k]]), X[k]);
        for (const auto& d : differences) {
            if (!d.count(q)) {
                w.inclusion_verified = false;
                break;
            }
        }
    }
    return w;
}

// ---------------------------------------------------------------------------

template <class E>
struct PowerCoverReport {
    int k = 2;
    std::size_t base_size = 0;      // |F|
    std::vector<E> translates;      // F_k
    std::size_t bound = 0;          // |F|^{k-1}
    std::size_t checked = 0;        // points of Lambda^k examined
    bool verified = false;
    std::optional<E> witness;
};

// Lambda^2 subset F Lambda gives Lambda^k subset F^{k-1} Lambda. Builds
// F_k = F^{k-1} (deduplicated) and checks w in F_k Lambda for every w in the
// patch-scope k-fold product set that passes `in_scope`, using the exact
// membership predicate of Lambda.
template <CoverGroup G>
PowerCoverReport<typename G::Element> approx_power_cover(const G& g, const std::vector<typename G::Element>& lambda, int k,
                                                         const std::vector<typename G::Element>& F,
                                                         const std::function<bool(const typename G::Element&)>& member,
                                                         const std::function<bool(const typename G::Element&)>& in_scope = {}) {
    using E = typename G::Element;
    if (k < 2) throw std::invalid_argument("approx_power_cover needs k >= 2");
    PowerCoverReport<E> rep;
    rep.k = k;
    rep.base_size = F.size();
    rep.bound = 1;
    for (int i = 1; i < k; ++i) rep.bound *= F.size();

    ElementSet<G> fk = make_set(g, F);
    for (int i = 2; i < k; ++i) {
        ElementSet<G> next(GroupLess<G>{&g});
        for (const auto& a : fk)
            for (const auto& f : F) next.insert(g.mul(a, f));
        fk = std::move(next);
    }
    rep.translates.assign(fk.begin(), fk.end());

    ElementSet<G> power = make_set(g, lambda);
    for (int i = 1; i < k; ++i) {
        ElementSet<G> next(GroupLess<G>{&g});
        for (const auto& a : power)
            for (const auto& l : lambda) next.insert(g.mul(a, l));
        power = std::move(next);
    }
    rep.verified = true;
    for (const auto& w : power) {
        if (in_scope && !in_scope(w)) continue;
        ++rep.checked;
        bool ok = std::any_of(rep.translates.begin(), rep.translates.end(),
                              [&](const E& f) { return member(g.mul(g.inv(f), w)); });
        if (!ok) {
            rep.verified = false;
            rep.witness = w;
            break;
        }
    }
    return rep;
}

}  // namespace meyerlab::verify
