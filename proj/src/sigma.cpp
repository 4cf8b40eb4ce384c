#include "cutstack/sigma.hpp"

#include <fstream>

#include "cutstack/errors.hpp"

namespace cutstack {

SigmaFunction SigmaFunction::identity() { return SigmaFunction{}; }

SigmaFunction SigmaFunction::log2() {
    SigmaFunction s;
    s.kind_ = Kind::Log2;
    s.spec_ = "log2";
    return s;
}

SigmaFunction SigmaFunction::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter_error("cannot open sigma table: " + path);
    SigmaFunction s;
    s.kind_ = Kind::Table;
    s.spec_ = "file:" + path;
    long n, v, prev_n = 0, prev_v = -1;
    while (in >> n >> v) {
        if (n <= prev_n && !s.table_.empty())
            throw invalid_parameter_error("sigma table n values must increase");
        if (v < prev_v)
            throw invalid_parameter_error("sigma table must be nondecreasing");
        s.table_[n] = v;
        prev_n = n;
        prev_v = v;
    }
    if (s.table_.empty()) throw invalid_parameter_error("empty sigma table: " + path);
    return s;
}

SigmaFunction SigmaFunction::parse(const std::string& spec) {
    if (spec == "identity") return identity();
    if (spec == "log2") return log2();
    if (spec.rfind("file:", 0) == 0) return from_file(spec.substr(5));
    throw invalid_parameter_error("unknown sigma spec: " + spec);
}

long SigmaFunction::operator()(long n) const {
    if (n < 1) throw invalid_parameter_error("sigma argument must be positive");
    switch (kind_) {
        case Kind::Identity:
            return n;
        case Kind::Log2: {
            long v = 0;
            long x = n + 1;
            while (x > 1) {
                x >>= 1;
                ++v;
            }
            return v; // floor(log2(n+1))
        }
        case Kind::Table: {
            auto it = table_.upper_bound(n);
            if (it == table_.begin()) return 0;
            return std::prev(it)->second;
        }
    }
    return 0;
}

} // namespace cutstack
