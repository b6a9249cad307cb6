#pragma once

#include "incdom/bounds.hpp"
#include "incdom/combinatorics.hpp"
#include "incdom/constructions.hpp"
#include "incdom/dompair.hpp"
#include "incdom/errors.hpp"
#include "incdom/graph.hpp"
#include "incdom/hypergraph.hpp"
#include "incdom/io.hpp"
#include "incdom/random.hpp"
#include "incdom/set_family.hpp"
#include "incdom/solver.hpp"
