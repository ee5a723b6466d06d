#pragma once

#include "csf/core.hpp"
#include "csf/partitions.hpp"
#include "csf/tabloids.hpp"
#include "csf/graphs.hpp"
#include "csf/graph_io.hpp"
#include "csf/counting.hpp"
#include "csf/closed_forms.hpp"
#include "csf/schur.hpp"
#include "csf/positivity.hpp"
