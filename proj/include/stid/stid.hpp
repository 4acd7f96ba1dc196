#pragma once

#include "stid/certificate.hpp"
#include "stid/digraph.hpp"
#include "stid/error.hpp"
#include "stid/lp.hpp"
#include "stid/matrix.hpp"
#include "stid/polytope.hpp"
#include "stid/random.hpp"
#include "stid/semiring.hpp"
#include "stid/verifier.hpp"
#include "stid/words.hpp"
