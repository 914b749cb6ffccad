#pragma once

#include "terra3d/error.hpp"
#include "terra3d/geodata/address_library.hpp"
#include "terra3d/geodata/file_io.hpp"
#include "terra3d/geodata/heatmap.hpp"
#include "terra3d/geodata/network3d.hpp"
#include "terra3d/geodata/point_set.hpp"
#include "terra3d/geodata/raster_grid.hpp"
#include "terra3d/geodata/report.hpp"
