#pragma once

// Umbrella header pulling in the whole toolkit.

#include "schur/numeric.hpp"
#include "schur/laurent.hpp"
#include "schur/ratfunc.hpp"
#include "schur/qint.hpp"
#include "schur/scalar_ring.hpp"
#include "schur/rootdata.hpp"
#include "schur/tensorspace.hpp"
#include "schur/operator.hpp"
#include "schur/linalg.hpp"
#include "schur/generators.hpp"
#include "schur/kostant.hpp"
#include "schur/algebra.hpp"
#include "schur/report.hpp"
#include "schur/presentations.hpp"
#include "schur/basis.hpp"
#include "schur/straighten.hpp"
#include "schur/subalg.hpp"
#include "schur/constants.hpp"
#include "schur/conjectures.hpp"
