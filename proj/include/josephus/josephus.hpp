#pragma once

// Umbrella header: the whole survivor-position library.

#include "josephus/types.hpp"     // IWYU pragma: export
#include "josephus/simulate.hpp"  // IWYU pragma: export
#include "josephus/eval.hpp"      // IWYU pragma: export
#include "josephus/extremal.hpp"  // IWYU pragma: export
#include "josephus/bench.hpp"     // IWYU pragma: export
#include "josephus/csv.hpp"       // IWYU pragma: export
