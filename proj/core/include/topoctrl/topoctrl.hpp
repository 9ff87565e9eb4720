#pragma once

// Umbrella header for the topoctrl library: sign-pattern controllability
// certification for diffusively coupled networks with dedicated input nodes.

#include "topoctrl/certify.hpp"
#include "topoctrl/decompose.hpp"
#include "topoctrl/graph.hpp"
#include "topoctrl/merge.hpp"
#include "topoctrl/numeric.hpp"
#include "topoctrl/types.hpp"
