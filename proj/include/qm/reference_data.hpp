#pragma once

#include <vector>

namespace qm {

// published coefficients H_m, 1 <= m <= 60, of the normalized gamma1
// generators at the six levels where the two groups differ; used as the
// ground-truth fixture the engine output is compared against
struct ReferenceTable {
  std::vector<long> levels;       // column order
  long max_m = 0;                 // rows cover 1..max_m
  std::vector<long long> values;  // (m-1) * levels.size() + column
};

const ReferenceTable& reference_table();

// column index of a level inside reference_table(); throws Error for levels
// outside the table
long reference_column(long level);

// H_m at the given level, 1 <= m <= 60
long long reference_coefficient(long level, long m);

}  // namespace qm
