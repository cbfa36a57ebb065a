#pragma once

// Umbrella header.

#include "dwgns/errors.hpp"
#include "dwgns/gns.hpp"
#include "dwgns/group.hpp"
#include "dwgns/invariant.hpp"
#include "dwgns/linalg.hpp"
#include "dwgns/link.hpp"
#include "dwgns/rational.hpp"
#include "dwgns/tqft.hpp"
#include "dwgns/zmatrix.hpp"
