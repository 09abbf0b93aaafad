#pragma once

#include "dblbrauer/symbolalg/symbol.hpp"
