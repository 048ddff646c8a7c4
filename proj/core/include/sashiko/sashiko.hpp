#pragma once

#include "sashiko/analysis.hpp"
#include "sashiko/design.hpp"
#include "sashiko/enumerate.hpp"
#include "sashiko/errors.hpp"
#include "sashiko/kogin.hpp"
#include "sashiko/polyomino.hpp"
#include "sashiko/render.hpp"
#include "sashiko/snowflake.hpp"
