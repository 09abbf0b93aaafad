#pragma once

#include "dblbrauer/moduli/moduli.hpp"
