#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace bactlink {

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);
std::string format_int(std::int64_t v);

/// CSV emitter. The schema string is the first header field and is repeated
/// as the first field of every row, so a file identifies its own layout and
/// version. The optional timestamp is a leading comment line -- the only
/// non-deterministic bytes a file can contain.
class CsvWriter {
  public:
    CsvWriter(std::ostream& out, std::string schema,
              const std::vector<std::string>& columns, bool timestamp);

    /// Emit one row; fields.size() must equal the column count.
    void row(const std::vector<std::string>& fields);

  private:
    std::ostream& out_;
    std::string schema_;
    std::size_t columns_;
};

}  // namespace bactlink
