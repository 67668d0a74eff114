#pragma once

#include "shadowpos/covers.hpp"
#include "shadowpos/error.hpp"
#include "shadowpos/families.hpp"
#include "shadowpos/graph.hpp"
#include "shadowpos/graph_io.hpp"
#include "shadowpos/metric.hpp"
#include "shadowpos/parallel.hpp"
#include "shadowpos/report.hpp"
#include "shadowpos/shadow.hpp"
#include "shadowpos/solvers.hpp"
#include "shadowpos/verify.hpp"
#include "shadowpos/vertex_set.hpp"
#include "shadowpos/visibility.hpp"
