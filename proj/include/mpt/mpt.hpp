#pragma once

#include "mpt/bounds.hpp"
#include "mpt/counting.hpp"
#include "mpt/generate.hpp"
#include "mpt/numeric.hpp"
#include "mpt/random.hpp"
#include "mpt/search.hpp"
#include "mpt/tournament.hpp"
#include "mpt/verify.hpp"
#include "mpt/version.hpp"
