#pragma once

#include "detseq/error.hpp"
#include "detseq/exact.hpp"
#include "detseq/polynomial.hpp"
#include "detseq/sequences.hpp"
#include "detseq/matrices.hpp"
#include "detseq/determinants.hpp"
#include "detseq/recurrence.hpp"
#include "detseq/oracles.hpp"
#include "detseq/banded.hpp"
#include "detseq/trees.hpp"
#include "detseq/json.hpp"
