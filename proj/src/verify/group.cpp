#include "meyerlab/verify/group.hpp"

#include <algorithm>
#include <cmath>

namespace meyerlab::verify {

double PatchGroup::approx_norm(const Element& a) const {
    double m = 0;
    for (double x : cps::physical_approx(ambient, a)) m = std::max(m, std::fabs(x));
    return m;
}

std::string PatchGroup::format(const Element& a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + to_string(a[i]);
    return s + ")";
}

}  // namespace meyerlab::verify
