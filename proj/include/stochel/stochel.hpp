#pragma once

#include "stochel/cloud.hpp"
#include "stochel/ensemble.hpp"
#include "stochel/errors.hpp"
#include "stochel/optimize.hpp"
#include "stochel/output.hpp"
#include "stochel/quadrature.hpp"
#include "stochel/random.hpp"
#include "stochel/report.hpp"
#include "stochel/special.hpp"
#include "stochel/stats.hpp"
#include "stochel/units.hpp"
#include "stochel/vacuum.hpp"
#include "stochel/variational.hpp"
#include "stochel/wavestate.hpp"
