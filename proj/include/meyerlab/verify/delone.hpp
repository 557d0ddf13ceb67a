#pragma once

#include "meyerlab/cps/patch.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

namespace meyerlab::verify {

// Nearest-neighbour search on double approximations of physical coordinates
// (sup-norm), bucketed on a uniform grid. Only used to choose witnesses; every
// reported bound is recomputed from exact enclosures.
class NearestSearch {
public:
    explicit NearestSearch(std::vector<std::vector<double>> points);
    // Index of a nearest point (lowest index on ties), or npos when empty.
    std::size_t nearest(const std::vector<double>& q) const;
    std::size_t size() const { return pts_.size(); }
    const std::vector<double>& point(std::size_t i) const { return pts_[i]; }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<long> cell_of(const std::vector<double>& q) const;
    std::uint64_t key(const std::vector<long>& cell) const;

    std::vector<std::vector<double>> pts_;
    std::size_t dim_ = 0;
    double cell_ = 1;
    std::vector<long> lo_, hi_;  // occupied cell range per axis
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

// Rational grid: coordinates outside `axes` are 0, the others run over `ticks`.
struct Grid {
    std::size_t dim = 1;
    std::vector<int> axes;
    std::vector<Rational> ticks;
    std::size_t size() const;
};

struct GridDistance {
    Rational worst{0};     // certified upper bound of max_g dist(g, patch)
    double empirical = 0;  // the same maximum in doubles
};

// Every grid point is matched to its nearest patch point in doubles; the
// maximum is then re-certified with exact enclosures for all grid points
// within a rounding margin of the double maximum.
GridDistance grid_distance(const Grid& grid, const NearestSearch& search, const std::vector<std::vector<Interval>>& exact);

// A distance |sigma_phys(element)| realised between points[first] and points[second].
struct ExactDistance {
    NFElem element;
    Interval enclosure;
    std::size_t first = 0;
    std::size_t second = 0;
};

// Minimum sup-norm distance over all pairs, exact. Throws UsageError for
// fewer than two points.
ExactDistance min_separation(const cps::Patch& patch);

struct CoveringRadius {
    std::optional<Rational> bound;  // nullopt: no finite bound at this scale
    Rational mesh;
    Rational inner_radius;
    double empirical = 0;
    std::size_t grid_points = 0;
};

struct CoveringOptions {
    std::size_t max_grid_points = 200'000;
};

// Certified rational rho such that every point of the inner ball is within rho
// of the patch: the largest certified grid-to-patch distance plus mesh/2. The
// mesh halves until the slack is within 10% of the empirical value. A bound
// that is not below inner_radius is reported as infinite.
CoveringRadius covering_radius(const cps::Patch& patch, const Rational& inner_radius, const CoveringOptions& opts = {});

struct DeloneReport {
    std::optional<ExactDistance> min_separation;
    CoveringRadius covering;
    std::string metric = "sup";

    bool uniformly_discrete() const { return min_separation && min_separation->enclosure.lo > 0; }
    bool relatively_dense() const { return covering.bound.has_value(); }
    bool delone() const { return uniformly_discrete() && relatively_dense(); }
};

DeloneReport delone_certify(const cps::Patch& patch, const Rational& inner_radius, const CoveringOptions& opts = {});

}  // namespace meyerlab::verify
