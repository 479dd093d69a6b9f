#include "core/rng.hpp"

// Header-only on purpose: the generator sits in the innermost sampling loops.
// This translation unit just anchors the target.
namespace maxloc {}
