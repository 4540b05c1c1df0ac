#pragma once

#include "sphcode/analysis.hpp"
#include "sphcode/configurations.hpp"
#include "sphcode/embedding.hpp"
#include "sphcode/harmonics.hpp"
#include "sphcode/scalars.hpp"
#include "sphcode/search.hpp"
