#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace cutstack {

// sigma(n): nondecreasing unbounded complexity-slack function. Built-ins plus
// a table loaded from file ("n value" per line, step-extended to the right).
class SigmaFunction {
public:
    enum class Kind { Identity, Log2, Table };

    static SigmaFunction identity();
    static SigmaFunction log2();
    // file format: whitespace-separated "n sigma(n)" pairs, n increasing;
    // sigma(n) for other n is the value at the largest tabulated point <= n
    // (0 before the first). Monotonicity is validated.
    static SigmaFunction from_file(const std::string& path);
    // parses "identity" | "log2" | "file:<path>"
    static SigmaFunction parse(const std::string& spec);

    long operator()(long n) const;
    Kind kind() const { return kind_; }
    const std::string& spec() const { return spec_; }

private:
    Kind kind_ = Kind::Identity;
    std::string spec_ = "identity";
    std::map<long, long> table_;
};

} // namespace cutstack
