#pragma once

#include "meyerlab/cps/patch.hpp"

#include <string>
#include <vector>

namespace meyerlab::io {

// Patch as CSV. '#' lines carry the ambient (field, law, dim, places, radius,
// provenance); then a header and one point per row. Coordinates are exact
// elements ("num/den" coefficients joined by ':'); when the ambient has an
// internal place each coordinate is followed by its Galois conjugate, and for
// each prime in `primes` a v_p column is added (rational coordinates only).
// Coordinate names: x (dim 1), x,y,z (Heisenberg), x0..x{n-1} otherwise.
std::string patch_csv(const cps::Patch& patch, const std::vector<Integer>& primes = {});

// Reads the metadata and the coordinate columns; derived columns are ignored.
cps::Patch read_patch_csv(const std::string& text);

std::vector<std::string> coordinate_names(const cps::Ambient& ambient);

}  // namespace meyerlab::io
