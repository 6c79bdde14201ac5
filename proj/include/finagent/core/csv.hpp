#pragma once

#include <string>
#include <vector>

namespace finagent {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column; throws PreconditionError when absent.
    size_t column(const std::string& name) const;
    bool has_column(const std::string& name) const;
};

// RFC-4180-ish: comma separated, double quotes with "" escapes, first row
// is the header.
CsvTable read_csv_file(const std::string& path);
CsvTable parse_csv(const std::string& content);

std::string csv_escape(const std::string& field);
std::string csv_join(const std::vector<std::string>& fields);

} // namespace finagent
