#pragma once

/**
 * @file ringlab.hpp
 * @brief Umbrella header for the finite *-ring library.
 */

#include "ringlab/caps.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/core_ring.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/report.hpp"
#include "ringlab/search.hpp"
#include "ringlab/spec_io.hpp"
#include "ringlab/star.hpp"
