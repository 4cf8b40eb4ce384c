#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cutstack {

// Incremental LZ78 parse. Phrase k (1-indexed) is emitted as ceil(log2 k)
// pointer bits (pointers range over 0..k-1, 0 = empty phrase) plus one
// innovation bit; a final partial phrase (input ends inside a known phrase)
// is emitted as a pointer only, recognized by the decoder via stream
// exhaustion. Codelength of the empty string is 0.
struct Lz78Result {
    long codelength_bits = 0;
    long phrases = 0; // full phrases (the partial final phrase not counted)
    std::vector<uint8_t> encoded;
};

Lz78Result lz78_encode(const std::vector<int>& bits);
long lz78_codelength(const std::vector<int>& bits);
std::vector<int> lz78_decode(const std::vector<uint8_t>& encoded, size_t bit_count);

// Running codelength after each input bit (cost of encoding exactly that
// prefix), in one pass.
std::vector<long> lz78_running_codelength(const std::vector<int>& bits);

// Streaming parser for long walks: feed bits, read the running codelength.
class Lz78Stream {
public:
    Lz78Stream();
    ~Lz78Stream();
    Lz78Stream(const Lz78Stream&) = delete;
    Lz78Stream& operator=(const Lz78Stream&) = delete;

    void push(int bit);
    long codelength() const; // codelength of everything pushed so far
    long size() const { return n_; }

private:
    struct Node;
    Node* root_;
    Node* cur_;
    long n_ = 0;
    long phrases_ = 0;
    long full_bits_ = 0;
    long depth_ = 0;
};

} // namespace cutstack
