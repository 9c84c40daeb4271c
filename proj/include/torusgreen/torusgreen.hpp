#ifndef TORUSGREEN_TORUSGREEN_HPP
#define TORUSGREEN_TORUSGREEN_HPP

// Umbrella header: potential theory on complex tori. Green functions with a
// mean-zero normalization, two-pole logarithmic potentials on the punctured
// torus, the induced conformal metrics and Bergman densities, and the
// numerical verification suite around them.

#include "cell_average.hpp"
#include "errors.hpp"
#include "finite_difference.hpp"
#include "format.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "potentials.hpp"
#include "report.hpp"
#include "scans.hpp"
#include "serialize.hpp"
#include "sup_search.hpp"
#include "svg.hpp"
#include "theta.hpp"
#include "verification.hpp"

#endif
