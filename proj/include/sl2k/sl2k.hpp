#pragma once
// Umbrella header: the whole library in one include.

#include "sl2k/scalar.hpp"
#include "sl2k/errors.hpp"
#include "sl2k/rng.hpp"
#include "sl2k/mat2.hpp"
#include "sl2k/iwasawa.hpp"
#include "sl2k/projective.hpp"
#include "sl2k/transporters.hpp"
#include "sl2k/genericity.hpp"
#include "sl2k/sampler.hpp"
#include "sl2k/cochain.hpp"
#include "sl2k/cocycles.hpp"
#include "sl2k/report.hpp"
#include "sl2k/suites.hpp"
