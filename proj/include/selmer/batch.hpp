#pragma once

// Batch certification with a fixed-size worker pool. Output order always
// matches input order.

#include <string>
#include <vector>

namespace selmer {

struct BatchResult {
  std::vector<std::string> lines;  // one JSON object per input
  std::size_t errors = 0;          // inputs that did not produce a certificate
};

/// Each input is a decimal integer (surrounding whitespace ignored). Bad
/// input yields {"input": ..., "error": ...} in its slot.
BatchResult certify_batch(const std::vector<std::string>& inputs, unsigned workers);

}  // namespace selmer
