#pragma once

// Umbrella header: exact Laplace-Beltrami spectra of the compact simple rank
// three Lie groups (plus Spin(5) and SO(5)) and their number-theoretic
// characterisation.

#include "lbspec/lattices.hpp"
#include "lbspec/number_theory.hpp"
#include "lbspec/output.hpp"
#include "lbspec/rational.hpp"
#include "lbspec/root_system.hpp"
#include "lbspec/spectrum.hpp"
#include "lbspec/theorems.hpp"
#include "lbspec/weight.hpp"
