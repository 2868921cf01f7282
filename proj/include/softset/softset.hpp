#pragma once

// Convenience header pulling in the whole library.

#include "softset/algebra.hpp"
#include "softset/analysis.hpp"
#include "softset/core.hpp"
#include "softset/io.hpp"
#include "softset/lattice_geometry.hpp"
#include "softset/rng.hpp"
