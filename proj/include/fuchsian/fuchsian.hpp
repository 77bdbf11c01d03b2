#pragma once

#include "fuchsian/attractor.hpp"
#include "fuchsian/boundary.hpp"
#include "fuchsian/circle.hpp"
#include "fuchsian/config.hpp"
#include "fuchsian/geodesic.hpp"
#include "fuchsian/io.hpp"
#include "fuchsian/markov.hpp"
#include "fuchsian/moebius.hpp"
#include "fuchsian/polygon.hpp"
#include "fuchsian/region.hpp"
#include "fuchsian/render.hpp"
#include "fuchsian/signature.hpp"
#include "fuchsian/simulate.hpp"
#include "fuchsian/validate.hpp"
