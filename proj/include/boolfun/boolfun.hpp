#pragma once

// Boolean functions under the binary Mobius transform: truth tables, ANF,
// the coincident (fixed-point) subspace and its constructions, symmetric
// specializations, cryptographic metrics, and sampling experiments.

#include "boolfun/analyze.hpp"
#include "boolfun/bit_table.hpp"
#include "boolfun/boolean_function.hpp"
#include "boolfun/coincident.hpp"
#include "boolfun/decompose.hpp"
#include "boolfun/experiments.hpp"
#include "boolfun/metrics.hpp"
#include "boolfun/mobius.hpp"
#include "boolfun/rng.hpp"
#include "boolfun/stats.hpp"
#include "boolfun/symmetric.hpp"
#include "boolfun/verify.hpp"
