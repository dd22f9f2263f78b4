#pragma once

// Umbrella header: exact-arithmetic toolkit for linear reflection groups.
// Individual headers can be included on their own; json_io.hpp additionally
// needs nlohmann/json and is pulled in by the CLI, not by this header.

#include "vinberg/cartan.hpp"
#include "vinberg/coxeter.hpp"
#include "vinberg/cycles.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/forge.hpp"
#include "vinberg/hnf.hpp"
#include "vinberg/integral.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/polynomial.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/represent.hpp"
#include "vinberg/subgroups.hpp"
