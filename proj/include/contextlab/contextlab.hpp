#pragma once

#include "contextlab/decomposition.hpp"
#include "contextlab/distributions.hpp"
#include "contextlab/errors.hpp"
#include "contextlab/glued_cycles.hpp"
#include "contextlab/graph.hpp"
#include "contextlab/inequalities.hpp"
#include "contextlab/io.hpp"
#include "contextlab/perfection.hpp"
#include "contextlab/quantum.hpp"
#include "contextlab/simplex.hpp"
#include "contextlab/stable_sets.hpp"
#include "contextlab/version.hpp"
