#pragma once

#include "zimin/arith/certify.hpp"
#include "zimin/arith/combinatorics.hpp"
#include "zimin/arith/interval.hpp"
#include "zimin/arith/rational.hpp"
#include "zimin/arith/special.hpp"
