#pragma once

#include <map>

#include "logcleaner/log.hpp"

// Direct transliteration of the scoring definitions: for every occurrence of
// x, scan entry by entry until the next x (or the end of the log) and take
// the first y. Quadratic and single-threaded. Linked by the tests and the
// benchmark as an independent baseline, never by the production library.
namespace logcleaner::reference {

double dscore_forward(const TemplateId& x, const TemplateId& y, const LogSet& set);
double dscore_backward(const TemplateId& x, const TemplateId& y, const LogSet& set);
double dscore_calc(const TemplateId& x, const TemplateId& y, const LogSet& set);
std::map<TemplateId, double> compute_mscore(const LogSet& set);

}  // namespace logcleaner::reference
