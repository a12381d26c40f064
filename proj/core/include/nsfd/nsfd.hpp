#pragma once

#include "nsfd/denominator.hpp"
#include "nsfd/errors.hpp"
#include "nsfd/lyapunov.hpp"
#include "nsfd/nsfd_scheme.hpp"
#include "nsfd/ode_system.hpp"
#include "nsfd/positivity.hpp"
#include "nsfd/problems.hpp"
#include "nsfd/properties.hpp"
#include "nsfd/reference_methods.hpp"
#include "nsfd/state.hpp"
#include "nsfd/trajectory.hpp"
#include "nsfd/weight.hpp"
