// Umbrella header.
#pragma once

#include "powergraph/catalog.hpp"
#include "powergraph/finite_field.hpp"
#include "powergraph/finite_group.hpp"
#include "powergraph/forbidden.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/harness.hpp"
#include "powergraph/number_theory.hpp"
#include "powergraph/permutation.hpp"
#include "powergraph/power_graphs.hpp"
#include "powergraph/recognizers.hpp"
#include "powergraph/report.hpp"
#include "powergraph/theorems.hpp"
