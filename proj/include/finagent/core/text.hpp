#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace finagent {

std::string trim(std::string_view s);
std::string to_upper(std::string_view s);
std::vector<std::string> split_lines(std::string_view s);

// Fixed deterministic token estimator: ceil(characters / 4).
std::int64_t estimate_tokens(std::string_view text);

// Reads an entire file as UTF-8 text. Throws UnreadableFile.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

} // namespace finagent
