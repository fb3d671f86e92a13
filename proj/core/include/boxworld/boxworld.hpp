#pragma once

#include "boxworld/behavior.hpp"
#include "boxworld/behavior_json.hpp"
#include "boxworld/cd_state.hpp"
#include "boxworld/convexify.hpp"
#include "boxworld/distribution.hpp"
#include "boxworld/ensembles.hpp"
#include "boxworld/error.hpp"
#include "boxworld/exact_linalg.hpp"
#include "boxworld/intrinsic.hpp"
#include "boxworld/nsce.hpp"
#include "boxworld/operator.hpp"
#include "boxworld/overhead.hpp"
#include "boxworld/parallel.hpp"
#include "boxworld/polytope.hpp"
#include "boxworld/private_state.hpp"
#include "boxworld/rational.hpp"
#include "boxworld/scenario.hpp"
#include "boxworld/simplex.hpp"
#include "boxworld/squash.hpp"
#include "boxworld/vertex_enum.hpp"
