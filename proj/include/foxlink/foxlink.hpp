#pragma once

// Fox colorings of link diagrams: determinants via Smith normal form,
// coloring enumeration, minimum palettes, and the verification harness.

#include "foxlink/coloring.hpp"
#include "foxlink/diagram.hpp"
#include "foxlink/errors.hpp"
#include "foxlink/intmatrix.hpp"
#include "foxlink/linktable.hpp"
#include "foxlink/snf.hpp"
#include "foxlink/theory.hpp"
#include "foxlink/verify.hpp"
