#include "cutstack/solovay.hpp"

#include <algorithm>

#include "cutstack/errors.hpp"

namespace cutstack {

long ones_count(const std::vector<int>& x) {
    return std::count(x.begin(), x.end(), 1);
}

std::vector<int> bits_from_string(const std::string& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            out.push_back(0);
        else if (c == '1')
            out.push_back(1);
        else if (c == '\n' || c == '\r' || c == ' ' || c == '\t')
            continue;
        else
            throw invalid_parameter_error(std::string("bad bit character '") + c + "'");
    }
    return out;
}

std::string bits_to_string(const std::vector<int>& x) {
    std::string s;
    s.reserve(x.size());
    for (int b : x) s.push_back(b ? '1' : '0');
    return s;
}

bool is_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() > b.size()) return false;
    return std::equal(a.begin(), a.end(), b.begin());
}

bool is_prefix_free(std::vector<std::vector<int>> xs) {
    std::sort(xs.begin(), xs.end());
    for (size_t i = 1; i < xs.size(); ++i)
        if (is_prefix(xs[i - 1], xs[i])) return false;
    return true;
}

} // namespace cutstack
