#pragma once

// Umbrella header for the ulrich-lab library.

#include "ulrich/betti.hpp"
#include "ulrich/field.hpp"
#include "ulrich/geometry.hpp"
#include "ulrich/ideal.hpp"
#include "ulrich/lattice.hpp"
#include "ulrich/matrix.hpp"
#include "ulrich/monomial.hpp"
#include "ulrich/pipeline.hpp"
#include "ulrich/points.hpp"
#include "ulrich/rational.hpp"
#include "ulrich/rng.hpp"
#include "ulrich/semigroup.hpp"
