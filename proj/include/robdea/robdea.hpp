#pragma once

// Umbrella header.

#include "robdea/csv.hpp"
#include "robdea/data.hpp"
#include "robdea/errors.hpp"
#include "robdea/fractional.hpp"
#include "robdea/lp.hpp"
#include "robdea/models.hpp"
#include "robdea/perturbation.hpp"
#include "robdea/ranking.hpp"
