#pragma once

// Umbrella header: exact cohomology of finite simplicial complexes, nerves
// of star-union covers, and the comparison between the partition-of-unity
// map and the Mayer-Vietoris zigzag.

#include "base.hpp"
#include "rings.hpp"
#include "linalg.hpp"
#include "simplicial.hpp"
#include "subdivision.hpp"
#include "covers.hpp"
#include "mv.hpp"
#include "harness.hpp"
