#ifndef ARBOREAL_ARBOREAL_HPP
#define ARBOREAL_ARBOREAL_HPP

#include "arboreal/analyze.hpp"
#include "arboreal/certify.hpp"
#include "arboreal/cyclo.hpp"
#include "arboreal/io.hpp"
#include "arboreal/linalg.hpp"
#include "arboreal/modp.hpp"
#include "arboreal/obstruct.hpp"
#include "arboreal/parallel.hpp"
#include "arboreal/poly.hpp"
#include "arboreal/roots.hpp"
#include "arboreal/spectrum.hpp"
#include "arboreal/startree.hpp"

#endif
