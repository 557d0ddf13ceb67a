#include "meyerlab/cps/interval_cover.hpp"

#include "meyerlab/cps/scheme.hpp"
#include "meyerlab/errors.hpp"

#include <algorithm>

namespace meyerlab::cps {

std::vector<NFElem> IntervalCover::translates() const {
    std::vector<NFElem> out;
    for (const auto& s : steps) out.push_back(s.translate);
    return out;
}

namespace {

struct Candidate {
    NFElem value;
    Interval conj;
    Rational norm;
};

}  // namespace

IntervalCover cover_interval(const Ambient& ambient, const Rational& target, const Rational& halfwidth,
                             const NFElem& offset, const IntervalCoverOptions& opts) {
    if (!ambient.internal) throw UsageError("interval cover needs a real internal place");
    if (target < 0 || halfwidth < 0) throw UsageError("cover bounds must be nonnegative");
    IntervalCover cover{target, halfwidth, opts.bits, {}};
    const RealEmbedding& inter = *ambient.internal;

    if (halfwidth == 0) {
        // Degenerate window: only sigma(t) = 0 works, and only a point can be covered.
        if (target != 0 || !offset.is_zero()) throw UsageError("a zero-width window covers only {0}");
        NFElem zero(ambient.field);
        cover.steps.push_back({zero, Interval::point(Rational(0)), Rational(0)});
        return cover;
    }

    Rational search = opts.initial_search_radius;
    Rational frontier = -target;
    const Interval offset_conj = eval_embedding(offset, inter, opts.bits);
    for (;;) {
        // Candidates t = offset + x with |sigma_int(t)| <= target + halfwidth.
        const Rational reach_bound = target + halfwidth + offset_conj.magnitude();
        std::vector<Candidate> cands;
        EnumerationOptions eopts;
        eopts.threads = opts.threads;
        for (auto& x : enumerate_quadratic(ambient, search, reach_bound, eopts)) {
            NFElem t = x + offset;
            Interval conj = eval_embedding(t, inter, opts.bits);
            Rational n = eval_embedding(t, ambient.physical, opts.bits).magnitude();
            cands.push_back({std::move(t), std::move(conj), std::move(n)});
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.norm < b.norm; });

        bool stalled = false;
        while (frontier < target || cover.steps.empty()) {
            const Candidate* best = nullptr;
            for (const auto& c : cands) {
                if (c.conj.hi - halfwidth > frontier) continue;
                if (!best || c.conj.lo > best->conj.lo) best = &c;
            }
            if (!best || (!cover.steps.empty() && best->conj.lo + halfwidth <= frontier)) {
                stalled = true;
                break;
            }
            frontier = best->conj.lo + halfwidth;
            cover.steps.push_back({best->value, best->conj, frontier});
        }
        if (!stalled) return cover;
        if (search >= opts.max_search_radius)
            throw ResourceError("interval cover search exhausted at radius " + search.get_str() + "; covered up to " +
                                frontier.get_str() + " of " + target.get_str());
        search *= 2;
    }
}

IntervalCover cover_interval(const Ambient& ambient, const Rational& target, const Rational& halfwidth,
                             const IntervalCoverOptions& opts) {
    return cover_interval(ambient, target, halfwidth, NFElem(ambient.field), opts);
}

bool replay(const IntervalCover& cover, const Ambient& ambient) {
    if (!ambient.internal || cover.steps.empty()) return false;
    if (cover.halfwidth == 0) {
        return cover.target == 0 && cover.steps.size() == 1 && cover.steps[0].translate.is_zero();
    }
    Rational frontier = -cover.target;
    for (const auto& step : cover.steps) {
        Interval conj = eval_embedding(step.translate, *ambient.internal, cover.bits);
        if (!(conj == step.conjugate)) return false;
        if (conj.hi - cover.halfwidth > frontier) return false;
        if (step.reach != conj.lo + cover.halfwidth) return false;
        frontier = std::max(frontier, step.reach);
    }
    return frontier >= cover.target;
}

}  // namespace meyerlab::cps
