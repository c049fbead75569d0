#pragma once

#include <iosfwd>
#include <string>

#include "cbas/disambiguation.hpp"
#include "cbas/evaluation.hpp"

namespace cbas::cli {

/// One JSON object, no trailing newline.
std::string stem_record(const StemResult& result);

/// WORD, CLUSTER and METRIC lines for an evaluation run.
void write_evaluation(std::ostream& out, const EvaluationReport& report);

}  // namespace cbas::cli
