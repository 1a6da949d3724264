#ifndef QUANDLE_HPP
#define QUANDLE_HPP

// Everything except the JSON helpers, which need nlohmann/json.

#include "quandle/error.hpp"
#include "quandle/permutation.hpp"
#include "quandle/core.hpp"
#include "quandle/morphisms.hpp"
#include "quandle/invariants.hpp"
#include "quandle/linalg.hpp"
#include "quandle/cohomology.hpp"
#include "quandle/link_diagram.hpp"
#include "quandle/coloring.hpp"
#include "quandle/group_ring.hpp"
#include "quandle/quiver.hpp"

#endif  // QUANDLE_HPP
