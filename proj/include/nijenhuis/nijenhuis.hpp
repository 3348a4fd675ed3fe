#pragma once

#include "nijenhuis/catalog.hpp"
#include "nijenhuis/congruence.hpp"
#include "nijenhuis/equivalence.hpp"
#include "nijenhuis/error.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"
#include "nijenhuis/polynomial.hpp"
#include "nijenhuis/quadric.hpp"
#include "nijenhuis/scalar.hpp"
