#pragma once
// Deterministic serialization of sweep results. Both writers promise
// byte-identical output for identical record lists: fixed column order,
// 17-significant-digit decimal floats, LF line endings, plain UTF-8. An
// empty sweep produces a header-only CSV (or an empty JSON record array).

#include <string>
#include <vector>

#include "fqho/sweep.hpp"

namespace fqho {

// One row per record in list order. Cells that do not apply (measures of a
// failed record, transform diagnostics of a momentum record) are left empty;
// divergent measures leave their value cell empty and list
// name:exponent@location tokens in the `divergent` column.
std::string to_csv(const std::vector<SweepRecord>& records);

// Mirrors the CSV fields per record, plus nested per-measure annotations and
// the free-text failure detail under `diagnostics`.
std::string to_json(const std::vector<SweepRecord>& records);

// Formats with %.17g (shortest exact round-trip for doubles).
std::string format_double(double value);

// Writes bytes exactly as given (binary mode, no newline translation).
// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fqho
