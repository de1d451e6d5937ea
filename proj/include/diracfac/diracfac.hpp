#pragma once

// Umbrella header: matrix families built from roots of unity, the n-th-root
// factorization checks, fractional-derivative operators, the linearized
// evolution solver, and the Levy-transform heat solver.

#include "diracfac/matrix.hpp"
#include "diracfac/roots.hpp"
#include "diracfac/families.hpp"
#include "diracfac/words.hpp"
#include "diracfac/triples.hpp"
#include "diracfac/rational.hpp"
#include "diracfac/gamma.hpp"
#include "diracfac/monomial.hpp"
#include "diracfac/frac_operator.hpp"
#include "diracfac/fft.hpp"
#include "diracfac/spectral.hpp"
#include "diracfac/evolution.hpp"
#include "diracfac/quadrature.hpp"
#include "diracfac/stable.hpp"
#include "diracfac/heat.hpp"
#include "diracfac/json.hpp"
#include "diracfac/random.hpp"
#include "diracfac/verify.hpp"
