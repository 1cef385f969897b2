// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "groverian/bounds.hpp"
#include "groverian/closed_form.hpp"
#include "groverian/core.hpp"
#include "groverian/io.hpp"
#include "groverian/oracle.hpp"
#include "groverian/random_states.hpp"
#include "groverian/solver.hpp"
#include "groverian/suites.hpp"
