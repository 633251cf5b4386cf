#pragma once

#include "biblock/error.hpp"
#include "biblock/graph.hpp"
#include "biblock/canonical.hpp"
#include "biblock/edge_list.hpp"
#include "biblock/blocks.hpp"
#include "biblock/independence.hpp"
#include "biblock/spectral.hpp"
#include "biblock/rewrite.hpp"
#include "biblock/enumerate.hpp"
