#pragma once

#include <optional>
#include <vector>

#include "cutstack/certified.hpp"
#include "cutstack/gadget.hpp"

namespace cutstack {

// Column class of a (possibly huge) gadget: per-column width, height, and how
// many columns share that shape. Gadgets too large to materialize are carried
// around as class lists; all measure arithmetic below is exact in them.
struct ColumnClass {
    Rat width;
    long height = 0;
    BigInt mult = 1;
};

std::vector<ColumnClass> classes_of(const Gadget& g);
Rat classes_width(const std::vector<ColumnClass>& cls);
Rat classes_support(const std::vector<ColumnClass>& cls);
long classes_min_height(const std::vector<ColumnClass>& cls);
BigInt classes_count(const std::vector<ColumnClass>& cls);

// Column classes of lambda^{*(M)} (M-fold independent cutting and stacking),
// grouped by (width, height). Returns nullopt if more than `limit` classes
// would be produced.
std::optional<std::vector<ColumnClass>> mfold_classes(const std::vector<ColumnClass>& lambda,
                                                      long M, size_t limit = 200000);

// Exact well-distribution defect of lambda in lambda^{*(M)} via the slot-count
// reduction: defect = (w/M) sum_i mult_i h_i E|c_i - w_i H|, where one column
// is drawn per slot with probability w_j/w, c_i counts the target column and
// H sums slot heights. Supports one or two distinct heights (two-height case
// costs O(M^2) terms; intended for small M and the cross-check tests).
Rat mfold_defect_exact(const std::vector<ColumnClass>& lambda, long M);

// Certified enclosure of the same quantity at any scale. For two-height
// gadgets the outer count is windowed with a rigorous Hoeffding tail bound
// folded into the enclosure.
IReal mfold_defect_enclosure(const std::vector<ColumnClass>& lambda, long M,
                             mpfr_prec_t prec = 192);

} // namespace cutstack
