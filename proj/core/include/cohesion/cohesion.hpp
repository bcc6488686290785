#pragma once

#include "cohesion/analysis.hpp"
#include "cohesion/corpusio.hpp"
#include "cohesion/dsp.hpp"
#include "cohesion/error.hpp"
#include "cohesion/report.hpp"
#include "cohesion/signal.hpp"
#include "cohesion/tiling.hpp"
#include "cohesion/vectors.hpp"
