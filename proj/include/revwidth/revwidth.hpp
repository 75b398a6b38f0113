#pragma once

#include "revwidth/errors.hpp"
#include "revwidth/numerics.hpp"
#include "revwidth/surface.hpp"
#include "revwidth/spheroid.hpp"
#include "revwidth/action_profile.hpp"
#include "revwidth/ech.hpp"
#include "revwidth/width.hpp"
#include "revwidth/packing.hpp"
#include "revwidth/geodesic.hpp"
