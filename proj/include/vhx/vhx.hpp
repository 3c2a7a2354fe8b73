#pragma once

#include "algebra.hpp"
#include "colorings.hpp"
#include "complex.hpp"
#include "invariants.hpp"
#include "linalg.hpp"
#include "oracles.hpp"
#include "parallel.hpp"
#include "poly.hpp"
#include "quad.hpp"
#include "ribbon.hpp"
#include "states.hpp"
