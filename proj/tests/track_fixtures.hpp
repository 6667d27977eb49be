#pragma once

#include "bicorn/suite.hpp"

namespace bicorn::testing {

using suite::elementary_track;
using suite::genus2_loops;
using suite::saddle_track;
using suite::spur_track;
using suite::torus_track;

}  // namespace bicorn::testing
