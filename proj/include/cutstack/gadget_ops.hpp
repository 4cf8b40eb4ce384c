#pragma once

#include <vector>

#include "cutstack/gadget.hpp"

namespace cutstack {

// Cuts g into |probs| copies of itself. probs must be positive and sum to 1
// exactly (invalid_distribution_error otherwise). Copy m scales every column
// width by probs[m]; copies are taken left to right within each interval, so
// the union of the copies' supports is exactly g's support. Provenance is
// inherited unchanged.
std::vector<Gadget> cut_gadget(const Gadget& g, const std::vector<Rat>& probs);

// Stacks e2 on top of e1. Requires equal widths and disjoint supports
// (incompatible_columns_error, reporting the first offending interval pair).
Column stack_columns(const Column& e1, const Column& e2);

// The gadget product u*l: for each column E_i of u, l is cut into a copy of
// width w(E_i), E_i is cut per that copy's distribution, and the copy's
// columns are stacked on the matching subcolumns. Column count multiplies.
Gadget stack_gadgets(const Gadget& u, const Gadget& l);

// M-fold independent cutting and stacking: g is cut into m equal-width copies
// which are stacked successively. Provenance of the result is reset relative
// to g (column i of g is source i), which is what the defect below consumes.
// m = 1 returns a copy of g with self-provenance.
Gadget m_fold_independent(const Gadget& g, long m);

// Well-distribution defect of lambda in upsilon:
//   sum_{D in lambda} sum_{E in upsilon} | l(E^ n D^) - l(E^) l(D^) |
// where l(E^ n D^) is read off upsilon's provenance (the union of subcolumns
// of D used to build E). Throws cannot_evaluate_error when provenance is
// missing or inconsistent with lambda.
Rat well_distribution_defect(const Gadget& lambda, const Gadget& upsilon);

} // namespace cutstack
