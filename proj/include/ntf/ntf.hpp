#pragma once

#include "ntf/error.hpp"
#include "ntf/monomial.hpp"
#include "ntf/ideal.hpp"
#include "ntf/decomposition.hpp"
#include "ntf/exact_lp.hpp"
#include "ntf/integrality.hpp"
#include "ntf/properties.hpp"
#include "ntf/hypergraph.hpp"
#include "ntf/graph.hpp"
#include "ntf/tspread.hpp"
#include "ntf/io.hpp"
