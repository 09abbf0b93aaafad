#pragma once

#include "dblbrauer/valuation/chart.hpp"
#include "dblbrauer/valuation/curve.hpp"
#include "dblbrauer/valuation/divisor.hpp"
#include "dblbrauer/valuation/rational_curve.hpp"
#include "dblbrauer/valuation/residue.hpp"
