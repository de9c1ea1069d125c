// Umbrella header.

#ifndef KANLOOP_KANLOOP_HPP
#define KANLOOP_KANLOOP_HPP

#include "kanloop/cw.hpp"
#include "kanloop/energy.hpp"
#include "kanloop/grid.hpp"
#include "kanloop/homology.hpp"
#include "kanloop/io.hpp"
#include "kanloop/lie.hpp"
#include "kanloop/realization.hpp"
#include "kanloop/simplicial.hpp"
#include "kanloop/word.hpp"

#endif  // KANLOOP_KANLOOP_HPP
