#pragma once

#include "contactlab/bounds.hpp"
#include "contactlab/coloring.hpp"
#include "contactlab/cyclepack.hpp"
#include "contactlab/discharging.hpp"
#include "contactlab/family.hpp"
#include "contactlab/generators.hpp"
#include "contactlab/graph.hpp"
#include "contactlab/io.hpp"
#include "contactlab/region_graph.hpp"
#include "contactlab/simplex.hpp"
#include "contactlab/sparsify.hpp"
