#pragma once

#include "trajsearch/classical_search.hpp"
#include "trajsearch/cost_table.hpp"
#include "trajsearch/discrete_space.hpp"
#include "trajsearch/numerics.hpp"
#include "trajsearch/problems.hpp"
#include "trajsearch/quantum_search.hpp"
#include "trajsearch/types.hpp"
