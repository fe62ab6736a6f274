#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace xxz {

// Decimal string with 17 significant digits, enough to round-trip an IEEE
// double exactly and stable across reruns. Non-finite values map to the
// canonical strings "inf", "-inf", "nan".
std::string decimal17(double x);

// Ordered JSON so emitted documents are byte-identical across runs.
using ojson = nlohmann::ordered_json;

// A numeric array as decimal17 strings.
ojson decimal17_array(const std::vector<double>& xs);

// Serialise with 2-space indentation, trailing newline, LF line endings.
std::string dump_json(const ojson& doc);
void write_json_file(const std::string& path, const ojson& doc);

// CSV with a header row, UTF-8, LF line endings. Cells are written verbatim;
// callers quote if needed (the emitted schemas never need quoting).
std::string dump_csv(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);
void write_csv_file(const std::string& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

}  // namespace xxz
