// Umbrella header.
#pragma once

#include "tiling/rational.hpp"
#include "tiling/factored.hpp"
#include "tiling/matrix.hpp"
#include "tiling/graph.hpp"
#include "tiling/matching.hpp"
#include "tiling/rewrite.hpp"
#include "tiling/aztec.hpp"
#include "tiling/composition.hpp"
#include "tiling/patterns.hpp"
#include "tiling/closed_forms.hpp"
#include "tiling/regions.hpp"
#include "tiling/verify.hpp"
