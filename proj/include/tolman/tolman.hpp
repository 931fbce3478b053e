#pragma once

#include "tolman/error.hpp"
#include "tolman/gkm.hpp"
#include "tolman/gkm_graph.hpp"
#include "tolman/int_vec.hpp"
#include "tolman/jupp.hpp"
#include "tolman/kahler_cone.hpp"
#include "tolman/localization.hpp"
#include "tolman/param_poly.hpp"
#include "tolman/projbundle.hpp"
#include "tolman/rational.hpp"
#include "tolman/serialization.hpp"
#include "tolman/toric.hpp"
#include "tolman/trilinear.hpp"
