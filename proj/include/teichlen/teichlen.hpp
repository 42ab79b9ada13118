#pragma once

// Umbrella header. Users should generally include only this file.

#include "teichlen/bounds.hpp"
#include "teichlen/errors.hpp"
#include "teichlen/hexagon.hpp"
#include "teichlen/io.hpp"
#include "teichlen/isometry.hpp"
#include "teichlen/mat2.hpp"
#include "teichlen/number_field.hpp"
#include "teichlen/pants.hpp"
#include "teichlen/polynomial.hpp"
#include "teichlen/precision.hpp"
#include "teichlen/presentation.hpp"
#include "teichlen/reciprocal.hpp"
#include "teichlen/report.hpp"
#include "teichlen/roots.hpp"
#include "teichlen/spectrum.hpp"
#include "teichlen/words.hpp"
