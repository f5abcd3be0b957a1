#pragma once

#include "chemistry.hpp"
#include "config.hpp"
#include "dna.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "evolve.hpp"
#include "experiments.hpp"
#include "genome.hpp"
#include "random.hpp"
#include "space.hpp"
#include "svg.hpp"
#include "trace_io.hpp"
