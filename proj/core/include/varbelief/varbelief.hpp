#pragma once

#include "varbelief/distribution.hpp"
#include "varbelief/estimation.hpp"
#include "varbelief/experiment.hpp"
#include "varbelief/information.hpp"
#include "varbelief/numeric.hpp"
#include "varbelief/objective.hpp"
#include "varbelief/parameters.hpp"
#include "varbelief/rng.hpp"
#include "varbelief/sequence.hpp"
#include "varbelief/simulate.hpp"
#include "varbelief/solver.hpp"
#include "varbelief/state_space.hpp"
#include "varbelief/updating.hpp"
