#pragma once

// Umbrella header for the monodromy-level Hecke eigensheaf verifier.

#include "hecke/config.hpp"
#include "hecke/errors.hpp"
#include "hecke/gagm.hpp"
#include "hecke/gl1.hpp"
#include "hecke/int_matrix.hpp"
#include "hecke/local_systems.hpp"
#include "hecke/maps.hpp"
#include "hecke/matrix.hpp"
#include "hecke/random.hpp"
#include "hecke/runner.hpp"
#include "hecke/scalar.hpp"
#include "hecke/serialize.hpp"
#include "hecke/spaces.hpp"
#include "hecke/words.hpp"
