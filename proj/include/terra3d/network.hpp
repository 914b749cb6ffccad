#pragma once

#include "terra3d/network/geocode.hpp"
#include "terra3d/network/indices.hpp"
#include "terra3d/network/routing.hpp"
