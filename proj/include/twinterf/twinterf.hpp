#pragma once

// Two-particle interference patterns for generalized n-port interferometers:
// channel-state algebra, splitter construction and network compilation,
// canned discrete experiments, the continuous (position-resolved) limit, and
// an independent brute-force oracle for cross-validation.

#include "twinterf/coincidence_distribution.hpp"
#include "twinterf/errors.hpp"
#include "twinterf/experiments.hpp"
#include "twinterf/hbt.hpp"
#include "twinterf/mode_vector.hpp"
#include "twinterf/oracle.hpp"
#include "twinterf/splitters.hpp"
#include "twinterf/two_boson_state.hpp"
#include "twinterf/version.hpp"
