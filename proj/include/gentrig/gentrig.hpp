#pragma once

#include "gentrig/checks.hpp"
#include "gentrig/config.hpp"
#include "gentrig/error.hpp"
#include "gentrig/gen_trig.hpp"
#include "gentrig/hyper_integrals.hpp"
#include "gentrig/param_analysis.hpp"
#include "gentrig/quadrature.hpp"
#include "gentrig/special_core.hpp"
#include "gentrig/table.hpp"
#include "gentrig/types.hpp"
