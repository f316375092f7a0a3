#pragma once

/**
 * @file lotusfrieze.hpp
 * @brief Umbrella header for the library (the CLI headers are separate).
 */

#include "lotusfrieze/bigint.hpp"
#include "lotusfrieze/contfrac.hpp"
#include "lotusfrieze/errors.hpp"
#include "lotusfrieze/frieze.hpp"
#include "lotusfrieze/lotus.hpp"
#include "lotusfrieze/polygon.hpp"
#include "lotusfrieze/polyparse.hpp"
#include "lotusfrieze/render.hpp"
#include "lotusfrieze/resolution.hpp"
#include "lotusfrieze/transform.hpp"
