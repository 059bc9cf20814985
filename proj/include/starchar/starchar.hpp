#pragma once

// Exact arithmetic for star-shaped graph characters: classification via the
// graph equation, special characters under the reflection functors S and T,
// Coxeter orbit dynamics of the odd/even parts, and the irreducibility /
// rational-span certificates behind the infinite-dimensionality result.

#include "starchar/character.hpp"
#include "starchar/coxeter_orbit.hpp"
#include "starchar/factor.hpp"
#include "starchar/graph_roots.hpp"
#include "starchar/independence.hpp"
#include "starchar/linalg.hpp"
#include "starchar/locally_scalar.hpp"
#include "starchar/number_field.hpp"
#include "starchar/polynomial.hpp"
#include "starchar/rational.hpp"
#include "starchar/scalar.hpp"
#include "starchar/star_graph.hpp"
