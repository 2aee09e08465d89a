#pragma once

#include "logimap/analysis.hpp"
#include "logimap/cdf.hpp"
#include "logimap/dist.hpp"
#include "logimap/empirical.hpp"
#include "logimap/errors.hpp"
#include "logimap/grid.hpp"
#include "logimap/map_param.hpp"
#include "logimap/pushforward.hpp"
#include "logimap/simulate.hpp"
