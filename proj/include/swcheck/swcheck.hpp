#pragma once

#include "swcheck/scalar.hpp"
#include "swcheck/small_matrix.hpp"
#include "swcheck/extalg.hpp"
#include "swcheck/cliff5.hpp"
#include "swcheck/curvature.hpp"
#include "swcheck/poly_expr.hpp"
#include "swcheck/models.hpp"
#include "swcheck/dirac_sw.hpp"
#include "swcheck/model_io.hpp"
#include "swcheck/report.hpp"
#include "swcheck/suites.hpp"
#include "swcheck/cli.hpp"
