#pragma once

// Umbrella header.

#include "oneplanar/bounds.hpp"
#include "oneplanar/canonical.hpp"
#include "oneplanar/connectivity.hpp"
#include "oneplanar/construct.hpp"
#include "oneplanar/decompose.hpp"
#include "oneplanar/drawing.hpp"
#include "oneplanar/drawing_io.hpp"
#include "oneplanar/drawing_ops.hpp"
#include "oneplanar/errors.hpp"
#include "oneplanar/graph.hpp"
#include "oneplanar/oracle.hpp"
#include "oneplanar/planarity.hpp"
#include "oneplanar/rational.hpp"
#include "oneplanar/rotation.hpp"
#include "oneplanar/svg.hpp"
