#pragma once

// Exact computation with points of the real spectrum of a polynomial
// ring, represented as semi-curvettes into a field of finite-support
// generalized power series.

#include "curvette/atlas.hpp"
#include "curvette/chart.hpp"
#include "curvette/errors.hpp"
#include "curvette/expr.hpp"
#include "curvette/hahn.hpp"
#include "curvette/indexset.hpp"
#include "curvette/json_io.hpp"
#include "curvette/lexvec.hpp"
#include "curvette/point.hpp"
#include "curvette/polynomial.hpp"
#include "curvette/relations.hpp"
#include "curvette/sampler.hpp"
#include "curvette/scalars.hpp"
#include "curvette/worked_example.hpp"
