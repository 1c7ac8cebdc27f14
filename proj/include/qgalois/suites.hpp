#pragma once

#include "qgalois/session.hpp"

namespace qgalois {

// All suite prefixes, in execution order.
std::vector<std::string> suite_names();

// Run every check matched by the selection (full name "suite/label", a
// suite prefix, a bare label such as "xiv", or "all") and append the
// results to the report. Independent checks may run in parallel, capped by
// QGALOIS_THREADS.
void run_suites(Session& s, const std::vector<std::string>& selection, Report& report);

// The derived-structure table (delta, sigma images, tau, delta_X, C_q, ...).
void fill_structure_table(Session& s, Report& report);

}  // namespace qgalois
