#pragma once

#include "dblbrauer/dblcover/branch.hpp"
#include "dblbrauer/dblcover/brauer.hpp"
#include "dblbrauer/dblcover/fixture.hpp"
#include "dblbrauer/dblcover/resolution.hpp"
#include "dblbrauer/dblcover/weil.hpp"
