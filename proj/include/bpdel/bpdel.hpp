#pragma once

#include "bpdel/errors.hpp"
#include "bpdel/graph.hpp"
#include "bpdel/patterns.hpp"
#include "bpdel/recognition.hpp"
#include "bpdel/random.hpp"
#include "bpdel/hole_structure.hpp"
#include "bpdel/flow.hpp"
#include "bpdel/hole_cut.hpp"
#include "bpdel/solver.hpp"
#include "bpdel/instances.hpp"
#include "bpdel/json_io.hpp"
