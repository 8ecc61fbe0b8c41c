// Umbrella header: the whole toolkit.
#pragma once

#include "parity/attractor.hpp"
#include "parity/bipartite.hpp"
#include "parity/branching.hpp"
#include "parity/brute_force.hpp"
#include "parity/core.hpp"
#include "parity/degree_one.hpp"
#include "parity/generate.hpp"
#include "parity/io.hpp"
#include "parity/rng.hpp"
#include "parity/self_reach.hpp"
#include "parity/solution.hpp"
#include "parity/svg_plot.hpp"
#include "parity/sweep.hpp"
#include "parity/swcp.hpp"
#include "parity/zielonka.hpp"
