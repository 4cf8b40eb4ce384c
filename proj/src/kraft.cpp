#include "cutstack/kraft.hpp"

#include <algorithm>
#include <set>

#include "cutstack/errors.hpp"

namespace cutstack {

long NuFunction::at(long length) const {
    if (length_steps.empty()) return 0;
    long v = 0;
    for (const auto& [l0, val] : length_steps) {
        if (length >= l0)
            v = val;
        else
            break;
    }
    if (length > last_length && last_length > 0) {
        // extension rule: hold the last value, +1 per doubling past the range
        long extra = 0;
        long bound = last_length;
        while (length > 2 * bound) {
            bound *= 2;
            ++extra;
        }
        v += extra;
    }
    return v;
}

NuFunction derive_nu(const EnumeratedFamily& fam, long j_max) {
    if (fam.lengths.empty()) throw invalid_parameter_error("empty family");
    for (size_t i = 1; i < fam.lengths.size(); ++i)
        if (fam.lengths[i] < fam.lengths[i - 1])
            throw invalid_parameter_error("derive_nu requires nondecreasing lengths");
    NuFunction nu;
    nu.last_length = fam.lengths.back();
    for (long j = 1; j <= j_max; ++j) {
        size_t idx = fam.tail_index(Rat::pow2(-2 * j));
        if (idx >= fam.lengths.size()) break;
        long l0 = fam.lengths[idx];
        if (!nu.length_steps.empty() && nu.length_steps.back().first == l0) {
            nu.length_steps.back().second = j;
        } else {
            nu.length_steps.emplace_back(l0, j);
        }
    }
    return nu;
}

long RhoFunction::rho(long n) const {
    long v = nu.at(n);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), BigInt(v).get_mpz_t());
    return static_cast<long>(mpz_get_si(s.get_mpz_t()));
}

long RhoFunction::witness(long n) const {
    long v = nu.at(n);
    long r = rho(n);
    return (r * r == v) ? r : r + 1; // ceil(sqrt(v))
}

RhoFunction derive_rho(const NuFunction& nu) { return RhoFunction{nu}; }

namespace {

// free code-tree blocks keyed by (depth, prefix); tightest-fit allocation
class KraftAllocator {
public:
    KraftAllocator() { free_.insert({0, ""}); }

    // allocate a codeword of exactly `len` bits; empty optional on exhaustion
    std::optional<std::string> allocate(long len) {
        // deepest free block with depth <= len; lexicographically first on ties
        const std::pair<long, std::string>* best = nullptr;
        for (const auto& blk : free_) {
            if (blk.first > len) continue;
            if (!best || blk.first > best->first ||
                (blk.first == best->first && blk.second < best->second))
                best = &blk;
        }
        if (!best) return std::nullopt;
        auto chosen = *best;
        free_.erase(chosen);
        std::string word = chosen.second;
        for (long d = chosen.first; d < len; ++d) {
            free_.insert({d + 1, word + "1"});
            word += "0";
        }
        return word;
    }

private:
    std::set<std::pair<long, std::string>> free_;
};

} // namespace

KraftCode::KraftCode(const std::vector<std::string>& strings, const NuFunction& nu, long c)
    : c_(c) {
    KraftAllocator alloc;
    for (const auto& x : strings) {
        long l = static_cast<long>(x.size());
        long target = std::max<long>(1, l - nu.at(l) + c);
        auto word = alloc.allocate(target);
        if (!word)
            throw certificate_violation_error("Kraft mass exhausted at length " +
                                              std::to_string(target) +
                                              " (nu over-discounts; wrong certificate)");
        pairs_.emplace_back(x, *word);
        enc_[x] = *word;
        dec_[*word] = x;
    }
}

const std::string& KraftCode::encode(const std::string& x) const {
    auto it = enc_.find(x);
    if (it == enc_.end()) throw invalid_parameter_error("string not in codebook");
    return it->second;
}

const std::string& KraftCode::decode(const std::string& codeword) const {
    auto it = dec_.find(codeword);
    if (it == dec_.end()) throw invalid_parameter_error("codeword not in codebook");
    return it->second;
}

bool KraftCode::prefix_free() const {
    std::vector<std::string> words;
    words.reserve(pairs_.size());
    for (const auto& [x, w] : pairs_) words.push_back(w);
    std::sort(words.begin(), words.end());
    for (size_t i = 1; i < words.size(); ++i) {
        const auto& a = words[i - 1];
        const auto& b = words[i];
        if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) return false;
    }
    return true;
}

Rat KraftCode::kraft_sum() const {
    Rat s = 0;
    for (const auto& [x, w] : pairs_) s += Rat::pow2(-static_cast<long>(w.size()));
    return s;
}

KraftCode kraft_code(const std::vector<std::string>& strings, const NuFunction& nu) {
    for (long c = 0; c <= 64; ++c) {
        try {
            return KraftCode(strings, nu, c);
        } catch (const certificate_violation_error&) {
            continue;
        }
    }
    throw certificate_violation_error("no normalizer c <= 64 admits a prefix-free assignment");
}

} // namespace cutstack
