#pragma once

#include "normpar/classify.hpp"
#include "normpar/generators.hpp"
#include "normpar/norms.hpp"
#include "normpar/numeric.hpp"
#include "normpar/oracle.hpp"
#include "normpar/pairs.hpp"
#include "normpar/preserver.hpp"
#include "normpar/rng.hpp"
