#pragma once

// Umbrella header: metric operators for diagonalizable pseudo-Hermitian
// and anti-pseudo-Hermitian 2x2 Hamiltonians, plus the rank-4 ladder
// system built on the same machinery.

#include "errors.hpp"
#include "tolerance.hpp"
#include "complexmat.hpp"
#include "pauli.hpp"
#include "classify.hpp"
#include "eigensystem.hpp"
#include "metric.hpp"
#include "involution.hpp"
#include "dynamics.hpp"
#include "catalog.hpp"
#include "leewick.hpp"
