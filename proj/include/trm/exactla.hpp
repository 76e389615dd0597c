#pragma once

#include "trm/exactla/matrix.hpp"
#include "trm/exactla/scalar.hpp"
#include "trm/exactla/subspace.hpp"
