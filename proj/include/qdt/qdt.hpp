#pragma once

// Umbrella header: the whole engine.

#include "qdt/calibration.hpp"
#include "qdt/errors.hpp"
#include "qdt/mindspace.hpp"
#include "qdt/paradox.hpp"
#include "qdt/probability.hpp"
#include "qdt/rng.hpp"
#include "qdt/sampler.hpp"
#include "qdt/scenario.hpp"
#include "qdt/tolerances.hpp"
#include "qdt/version.hpp"
