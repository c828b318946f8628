#pragma once

#include "covdepth/asymptotics.hpp"
#include "covdepth/codes.hpp"
#include "covdepth/coverage.hpp"
#include "covdepth/gf.hpp"
#include "covdepth/invariants.hpp"
#include "covdepth/io.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"
#include "covdepth/rng.hpp"
#include "covdepth/search.hpp"
