#pragma once

//! Umbrella header.

#include "rpolar/eigen_sym.hpp"
#include "rpolar/energy.hpp"
#include "rpolar/field.hpp"
#include "rpolar/field_io.hpp"
#include "rpolar/kinematics.hpp"
#include "rpolar/mat3.hpp"
#include "rpolar/nanoindent.hpp"
#include "rpolar/oracle.hpp"
#include "rpolar/planar.hpp"
#include "rpolar/psd.hpp"
#include "rpolar/relaxed_polar.hpp"
#include "rpolar/rotation.hpp"
