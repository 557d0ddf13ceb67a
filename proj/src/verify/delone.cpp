#include "meyerlab/verify/delone.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace meyerlab::verify {

namespace {

double sup_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

std::vector<std::vector<double>> approx_points(const cps::Patch& patch) {
    std::vector<std::vector<double>> out;
    out.reserve(patch.points.size());
    for (const auto& p : patch.points) out.push_back(cps::physical_approx(patch.ambient, p));
    return out;
}

}  // namespace

NearestSearch::NearestSearch(std::vector<std::vector<double>> points) : pts_(std::move(points)) {
    if (pts_.empty()) return;
    dim_ = pts_[0].size();
    std::vector<double> mn(dim_, std::numeric_limits<double>::infinity()), mx(dim_, -std::numeric_limits<double>::infinity());
    for (const auto& p : pts_)
        for (std::size_t i = 0; i < dim_; ++i) {
            mn[i] = std::min(mn[i], p[i]);
            mx[i] = std::max(mx[i], p[i]);
        }
    double volume = 1;
    int spread = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        if (mx[i] > mn[i]) {
            volume *= mx[i] - mn[i];
            ++spread;
        }
    cell_ = spread == 0 ? 1.0 : 1.5 * std::pow(volume / static_cast<double>(pts_.size()), 1.0 / spread);
    if (!(cell_ > 0)) cell_ = 1.0;
    lo_ = cell_of(mn);
    hi_ = cell_of(mx);
    for (std::size_t i = 0; i < pts_.size(); ++i) buckets_[key(cell_of(pts_[i]))].push_back(i);
}

std::vector<long> NearestSearch::cell_of(const std::vector<double>& q) const {
    std::vector<long> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = static_cast<long>(std::floor(q[i] / cell_));
    return c;
}

std::uint64_t NearestSearch::key(const std::vector<long>& cell) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (long c : cell) {
        h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 1099511628211ULL;
    }
    return h;
}

std::size_t NearestSearch::nearest(const std::vector<double>& q) const {
    if (pts_.empty()) return npos;
    const auto centre = cell_of(q);
    long reach = 0;
    for (std::size_t i = 0; i < dim_; ++i) reach = std::max({reach, std::labs(centre[i] - lo_[i]), std::labs(hi_[i] - centre[i])});
    std::size_t best = npos;
    double best_d = std::numeric_limits<double>::infinity();
    std::vector<long> off(dim_), from(dim_), to(dim_);
    for (long k = 0; k <= reach; ++k) {
        // Cells whose Chebyshev offset is exactly k, clipped to the occupied range.
        bool empty = false;
        for (std::size_t i = 0; i < dim_; ++i) {
            from[i] = std::max(-k, lo_[i] - centre[i]);
            to[i] = std::min(k, hi_[i] - centre[i]);
            if (from[i] > to[i]) empty = true;
        }
        if (!empty) {
            off = from;
            for (;;) {
                long m = 0;
                for (long o : off) m = std::max(m, std::labs(o));
                if (m == k) {
                    std::vector<long> cell(dim_);
                    for (std::size_t i = 0; i < dim_; ++i) cell[i] = centre[i] + off[i];
                    auto it = buckets_.find(key(cell));
                    if (it != buckets_.end())
                        for (std::size_t idx : it->second) {
                            double d = sup_dist(pts_[idx], q);
                            if (d < best_d || (d == best_d && idx < best)) {
                                best_d = d;
                                best = idx;
                            }
                        }
                }
                std::size_t i = 0;
                while (i < dim_ && off[i] == to[i]) {
                    off[i] = from[i];
                    ++i;
                }
                if (i == dim_) break;
                ++off[i];
            }
        }
        // Unvisited cells are more than k cells away: distance > k * cell.
        if (best != npos && best_d <= static_cast<double>(k) * cell_) break;
    }
    return best;
}

ExactDistance min_separation(const cps::Patch& patch) {
    const auto& pts = patch.points;
    if (pts.size() < 2) throw UsageError("min_separation needs at least two points");
    const auto approx = approx_points(patch);
    double maxabs = 0;
    for (const auto& p : approx)
        for (double x : p) maxabs = std::max(maxabs, std::fabs(x));
    // Double errors are below 1e-14 * (1 + maxabs); the margin dwarfs them, so
    // the true minimising pair is always among the candidates.
    const double margin = 1e-9 * (1 + maxabs);

    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return approx[i][0] < approx[j][0]; });

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (approx[order[b]][0] - approx[order[a]][0] > best) break;
            best = std::min(best, sup_dist(approx[order[a]], approx[order[b]]));
        }
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (approx[order[b]][0] - approx[order[a]][0] > best + margin) break;
            if (sup_dist(approx[order[a]], approx[order[b]]) <= best + margin)
                candidates.emplace_back(std::min(order[a], order[b]), std::max(order[a], order[b]));
        }
    std::sort(candidates.begin(), candidates.end());

    const auto& phys = patch.ambient.physical;
    std::optional<ExactDistance> result;
    for (auto [i, j] : candidates) {
        // Exact sup over coordinates of |sigma(p_i - p_j)|.
        std::optional<NFElem> d;
        for (std::size_t c = 0; c < pts[i].size(); ++c) {
            NFElem diff = pts[j][c] - pts[i][c];
            if (!d || compare_abs(diff, *d, phys) > 0) d = std::move(diff);
        }
        if (!result || compare_abs(*d, result->element, phys) < 0) {
            if (sign_of(*d, phys) < 0) d = -*d;
            result = ExactDistance{*d, Interval{}, i, j};
        }
    }
    result->enclosure = abs(eval_embedding(result->element, phys, 96));
    return *result;
}

std::size_t Grid::size() const {
    std::size_t t = 1;
    for (std::size_t i = 0; i < axes.size(); ++i) t *= ticks.size();
    return t;
}

GridDistance grid_distance(const Grid& grid, const NearestSearch& search, const std::vector<std::vector<Interval>>& exact) {
    GridDistance out;
    if (search.size() == 0) throw UsageError("grid distance to an empty patch");
    const std::size_t total = grid.size();
    std::vector<double> ticks;
    double maxabs = 0;
    for (const auto& t : grid.ticks) {
        ticks.push_back(t.get_d());
        maxabs = std::max(maxabs, std::fabs(ticks.back()));
    }
    for (std::size_t i = 0; i < search.size(); ++i)
        for (double x : search.point(i)) maxabs = std::max(maxabs, std::fabs(x));
    auto coords = [&](std::size_t n, auto&& set) {
        for (std::size_t i = grid.axes.size(); i-- > 0;) {
            set(static_cast<std::size_t>(grid.axes[i]), n % grid.ticks.size());
            n /= grid.ticks.size();
        }
    };
    std::vector<double> dd(total);
    std::vector<std::size_t> nearest(total);
    std::vector<double> gd(grid.dim, 0.0);
    for (std::size_t n = 0; n < total; ++n) {
        coords(n, [&](std::size_t axis, std::size_t t) { gd[axis] = ticks[t]; });
        nearest[n] = search.nearest(gd);
        dd[n] = sup_dist(gd, search.point(nearest[n]));
        out.empirical = std::max(out.empirical, dd[n]);
    }
    const double margin = 1e-9 * (1 + maxabs);
    for (std::size_t n = 0; n < total; ++n) {
        if (dd[n] < out.empirical - margin) continue;
        std::vector<Interval> g(grid.dim, Interval::point(Rational(0)));
        coords(n, [&](std::size_t axis, std::size_t t) { g[axis] = Interval::point(grid.ticks[t]); });
        out.worst = std::max(out.worst, cps::sup_distance(g, exact[nearest[n]]).hi);
    }
    return out;
}

CoveringRadius covering_radius(const cps::Patch& patch, const Rational& inner_radius, const CoveringOptions& opts) {
    if (inner_radius <= 0) throw UsageError("inner radius must be > 0");
    if (inner_radius > patch.radius) throw UsageError("inner radius exceeds the patch radius");
    CoveringRadius out;
    out.inner_radius = inner_radius;
    const std::size_t dim = patch.ambient.dim;
    if (patch.points.empty()) {
        out.mesh = inner_radius;
        return out;
    }
    NearestSearch search(approx_points(patch));
    std::vector<std::vector<Interval>> exact;
    exact.reserve(patch.points.size());
    for (const auto& p : patch.points) exact.push_back(cps::physical_intervals(patch.ambient, p));

    Rational mesh = inner_radius / 4;
    for (;;) {
        const Integer steps = floor_of(2 * inner_radius / mesh);
        const std::size_t per_axis = steps.get_ui() + 1;
        Grid grid;
        grid.dim = dim;
        for (std::size_t d = 0; d < dim; ++d) grid.axes.push_back(static_cast<int>(d));
        for (std::size_t i = 0; i < per_axis; ++i) grid.ticks.push_back(-inner_radius + mesh * static_cast<long>(i));
        const std::size_t total = grid.size();
        const GridDistance gdist = grid_distance(grid, search, exact);
        const Rational& worst = gdist.worst;
        const double emp = gdist.empirical;
        // Any point is within mesh/2 (sup-norm) of a grid point of the closed box.
        out.mesh = mesh;
        out.empirical = emp;
        out.grid_points = total;
        Rational rho = worst + mesh / 2;
        std::size_t next_total = 1;
        for (std::size_t d = 0; d < dim; ++d) next_total *= 2 * per_axis;
        if (Rational(mesh / 2).get_d() <= 0.1 * emp || next_total > opts.max_grid_points || emp == 0) {
            if (rho < inner_radius) out.bound = rho;
            return out;
        }
        mesh /= 2;
    }
}

DeloneReport delone_certify(const cps::Patch& patch, const Rational& inner_radius, const CoveringOptions& opts) {
    DeloneReport r;
    if (patch.points.size() >= 2) r.min_separation = min_separation(patch);
    r.covering = covering_radius(patch, inner_radius, opts);
    return r;
}

}  // namespace meyerlab::verify
