#pragma once

#include "gmf/field.hpp"
#include "gmf/ring.hpp"
#include "gmf/polynomial.hpp"
#include "gmf/expression.hpp"
#include "gmf/free_module.hpp"
#include "gmf/linalg.hpp"
#include "gmf/random.hpp"
#include "gmf/groebner.hpp"
#include "gmf/resolution.hpp"
#include "gmf/quotient.hpp"
#include "gmf/modules.hpp"
#include "gmf/mf.hpp"
#include "gmf/functors.hpp"
#include "gmf/parallel.hpp"
#include "gmf/sod.hpp"

namespace gmf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gmf
