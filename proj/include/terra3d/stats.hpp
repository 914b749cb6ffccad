#pragma once

#include "terra3d/stats/correlation.hpp"
#include "terra3d/stats/grid_interpolation.hpp"
#include "terra3d/stats/idw.hpp"
#include "terra3d/stats/kriging.hpp"
#include "terra3d/stats/nurbs.hpp"
#include "terra3d/stats/trend_surface.hpp"
#include "terra3d/stats/variogram.hpp"
