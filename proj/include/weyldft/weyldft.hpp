// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include "weyldft/affine.hpp"
#include "weyldft/grids.hpp"
#include "weyldft/io.hpp"
#include "weyldft/orbitfn.hpp"
#include "weyldft/rational.hpp"
#include "weyldft/rootdata.hpp"
#include "weyldft/transforms.hpp"
#include "weyldft/weyl.hpp"
