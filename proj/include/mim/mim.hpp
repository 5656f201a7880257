#pragma once

#include "mim/disjoint_set.hpp"
#include "mim/generate.hpp"
#include "mim/io.hpp"
#include "mim/match_lists.hpp"
#include "mim/oracle.hpp"
#include "mim/permutation.hpp"
#include "mim/permutation_mim.hpp"
#include "mim/trapezoid.hpp"
#include "mim/trapezoid_mim.hpp"
#include "mim/types.hpp"
