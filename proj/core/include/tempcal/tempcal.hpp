#pragma once

#include "tempcal/core.hpp"
#include "tempcal/errors.hpp"
#include "tempcal/fit.hpp"
#include "tempcal/io.hpp"
#include "tempcal/metrics.hpp"
#include "tempcal/random.hpp"
#include "tempcal/report.hpp"
#include "tempcal/scalar_opt.hpp"
#include "tempcal/synth.hpp"
#include "tempcal/ts.hpp"
#include "tempcal/uts.hpp"
