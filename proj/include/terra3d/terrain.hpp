#pragma once

#include "terra3d/terrain/terrain.hpp"
