#pragma once

#include "dblbrauer/polycore/error.hpp"
#include "dblbrauer/polycore/extfield.hpp"
#include "dblbrauer/polycore/factor.hpp"
#include "dblbrauer/polycore/field.hpp"
#include "dblbrauer/polycore/gcd.hpp"
#include "dblbrauer/polycore/matrix.hpp"
#include "dblbrauer/polycore/mpoly.hpp"
#include "dblbrauer/polycore/ratfn.hpp"
#include "dblbrauer/polycore/resultant.hpp"
#include "dblbrauer/polycore/text.hpp"
#include "dblbrauer/polycore/upoly.hpp"
