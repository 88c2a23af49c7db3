#include "qclone/cli_util.hpp"

#include <stdexcept>

namespace qclone::cli {

std::vector<double> parse_span(const std::string& spec) {
    auto p1 = spec.find(':');
    auto p2 = spec.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw std::invalid_argument("span must be start:end:count");
    size_t used = 0;
    double lo = std::stod(spec.substr(0, p1), &used);
    if (used != p1) throw std::invalid_argument("bad span start");
    double hi = std::stod(spec.substr(p1 + 1, p2 - p1 - 1), &used);
    if (used != p2 - p1 - 1) throw std::invalid_argument("bad span end");
    int count = std::stoi(spec.substr(p2 + 1), &used);
    if (used != spec.size() - p2 - 1 || count < 1)
        throw std::invalid_argument("bad span count");
    std::vector<double> out;
    for (int i = 0; i < count; ++i)
        out.push_back(lo + (hi - lo) * (count == 1 ? 0.0 : double(i) / (count - 1)));
    return out;
}

}  // namespace qclone::cli
