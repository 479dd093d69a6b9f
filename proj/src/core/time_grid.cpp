#include "core/time_grid.hpp"

namespace maxloc {}
