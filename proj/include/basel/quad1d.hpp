#pragma once

// One-dimensional engines: adaptive Gauss-Kronrod and tanh-sinh.

#include "basel/gauss_kronrod.hpp"
#include "basel/tanh_sinh.hpp"
#include "basel/types.hpp"
