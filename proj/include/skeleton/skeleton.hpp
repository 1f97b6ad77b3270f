#pragma once

/// Umbrella header for the skeleton library.

#include "skeleton/critical.hpp"
#include "skeleton/double_double.hpp"
#include "skeleton/error.hpp"
#include "skeleton/geometry.hpp"
#include "skeleton/grid_oracle.hpp"
#include "skeleton/kernels.hpp"
#include "skeleton/numeric.hpp"
#include "skeleton/operators.hpp"
#include "skeleton/output.hpp"
#include "skeleton/parallel.hpp"
#include "skeleton/quadrature.hpp"
#include "skeleton/sectors.hpp"
#include "skeleton/verify.hpp"
