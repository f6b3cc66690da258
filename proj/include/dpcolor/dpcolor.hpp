#pragma once

#include "dpcolor/catalog.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/discharging.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/generator.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane.hpp"
#include "dpcolor/reduction.hpp"
#include "dpcolor/solver.hpp"
