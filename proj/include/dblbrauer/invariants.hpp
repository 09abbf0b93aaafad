#pragma once

#include "dblbrauer/invariants/invariants.hpp"
