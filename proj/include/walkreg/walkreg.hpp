#pragma once

#include "walkreg/electrical.hpp"
#include "walkreg/enumerate.hpp"
#include "walkreg/error.hpp"
#include "walkreg/families.hpp"
#include "walkreg/graph.hpp"
#include "walkreg/graph6.hpp"
#include "walkreg/matrix.hpp"
#include "walkreg/rational.hpp"
#include "walkreg/scanner.hpp"
#include "walkreg/spectral.hpp"
#include "walkreg/symmetry.hpp"
#include "walkreg/walks.hpp"
