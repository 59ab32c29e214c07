#pragma once

#include "mixedvol/fitting.hpp"
#include "mixedvol/graded_family.hpp"
#include "mixedvol/io.hpp"
#include "mixedvol/linalg.hpp"
#include "mixedvol/monomial.hpp"
#include "mixedvol/multiplicities.hpp"
#include "mixedvol/okounkov.hpp"
#include "mixedvol/polytope.hpp"
#include "mixedvol/rational.hpp"
#include "mixedvol/verification.hpp"
#include "mixedvol/volume_polynomial.hpp"
