#pragma once

#include "tollgrid/auxiliary.hpp"
#include "tollgrid/csv.hpp"
#include "tollgrid/delay.hpp"
#include "tollgrid/eq_solver.hpp"
#include "tollgrid/fixtures.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/mpec.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/network_io.hpp"
#include "tollgrid/parallel.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"
#include "tollgrid/projection.hpp"
#include "tollgrid/so_solver.hpp"
#include "tollgrid/util.hpp"
