#pragma once

#include "permpat/checked.hpp"
#include "permpat/classify.hpp"
#include "permpat/enumerate.hpp"
#include "permpat/error.hpp"
#include "permpat/formulas.hpp"
#include "permpat/generators.hpp"
#include "permpat/occurrence.hpp"
#include "permpat/permutation.hpp"
#include "permpat/rational.hpp"
#include "permpat/restriction.hpp"
#include "permpat/symmetry.hpp"
