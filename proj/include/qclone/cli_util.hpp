#pragma once

#include <string>
#include <vector>

namespace qclone::cli {

// Parse a "start:end:count" span, inclusive of both endpoints.
std::vector<double> parse_span(const std::string& spec);

}  // namespace qclone::cli
