#ifndef QUANTFAM_CSV_HPP_
#define QUANTFAM_CSV_HPP_

#include <map>
#include <string>
#include <vector>

#include "quantfam/distribution.hpp"

namespace quantfam {

struct CsvReadOptions {
    bool skip_bad_rows = false;
};

struct CsvColumn {
    std::vector<double> values;
    int skipped_rows = 0;
};

/// Reads one numeric column from a headered CSV file. A row that fails to
/// parse is fatal (IoError naming the row) unless skip_bad_rows is set, in
/// which case it is counted.
CsvColumn read_csv_column(const std::string& path, const std::string& column,
                          const CsvReadOptions& options = {});

/// Like read_csv_column but also keyed by a second (string) column.
std::map<std::string, std::vector<double>> read_csv_grouped(const std::string& path,
                                                            const std::string& column,
                                                            const std::string& group_column,
                                                            const CsvReadOptions& options = {});

/// One value per line under header "x".
void write_sample_csv(const std::string& path, const SamplePayload& payload);

/// JSON sidecar {"seed":..., "n":..., "spec":{...}}.
void write_sample_sidecar(const std::string& path, const SamplePayload& payload);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace quantfam

#endif  // QUANTFAM_CSV_HPP_
