#pragma once

#include "dblbrauer/clifford/clifford.hpp"
