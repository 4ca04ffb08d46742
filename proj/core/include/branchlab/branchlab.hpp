#pragma once

#include "branchlab/errors.hpp"
#include "branchlab/io/csv.hpp"
#include "branchlab/io/serialize.hpp"
#include "branchlab/limits/brownian_moments.hpp"
#include "branchlab/limits/contour.hpp"
#include "branchlab/limits/convergence.hpp"
#include "branchlab/limits/cpp_sampler.hpp"
#include "branchlab/limits/integrals.hpp"
#include "branchlab/mmm/metric.hpp"
#include "branchlab/mmm/monomial.hpp"
#include "branchlab/mmm/space.hpp"
#include "branchlab/moments/moments.hpp"
#include "branchlab/moments/product_functional.hpp"
#include "branchlab/moments/rescaled.hpp"
#include "branchlab/parallel.hpp"
#include "branchlab/process/criticality.hpp"
#include "branchlab/process/marked_tree.hpp"
#include "branchlab/process/model.hpp"
#include "branchlab/process/population.hpp"
#include "branchlab/process/simulate.hpp"
#include "branchlab/process/survival.hpp"
#include "branchlab/random.hpp"
#include "branchlab/spine/functional.hpp"
#include "branchlab/spine/kernel.hpp"
#include "branchlab/spine/many_to_one.hpp"
#include "branchlab/spine/q_expectation.hpp"
#include "branchlab/tree/distance_matrix.hpp"
#include "branchlab/tree/enumerate.hpp"
#include "branchlab/tree/planar_tree.hpp"
#include "branchlab/tree/tree_shape.hpp"
#include "branchlab/tree/vertex.hpp"
