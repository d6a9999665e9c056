#pragma once

// Everything except the exponential brute-force metrics
// (phylolattice/metrics_bruteforce.hpp), which are for tests.

#include "phylolattice/error.hpp"
#include "phylolattice/face.hpp"
#include "phylolattice/face_set.hpp"
#include "phylolattice/graph.hpp"
#include "phylolattice/network.hpp"
#include "phylolattice/gram.hpp"
#include "phylolattice/cliquegram.hpp"
#include "phylolattice/filtration.hpp"
#include "phylolattice/grams.hpp"
#include "phylolattice/mergegram.hpp"
#include "phylolattice/reeb.hpp"
#include "phylolattice/persistence.hpp"
#include "phylolattice/metrics.hpp"
#include "phylolattice/generate.hpp"
#include "phylolattice/experiment.hpp"
#include "phylolattice/io/newick.hpp"
#include "phylolattice/io/matrix_csv.hpp"
#include "phylolattice/io/json.hpp"
#include "phylolattice/io/dot.hpp"
#include "phylolattice/io/svg.hpp"
