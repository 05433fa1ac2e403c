#pragma once

#include "tsurf/error.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/scalar.hpp"
#include "tsurf/geometry.hpp"
#include "tsurf/surface.hpp"
#include "tsurf/families.hpp"
#include "tsurf/cf.hpp"
#include "tsurf/shear.hpp"
#include "tsurf/words.hpp"
#include "tsurf/flow.hpp"
#include "tsurf/cylinders.hpp"
#include "tsurf/io.hpp"
#include "tsurf/svg.hpp"
