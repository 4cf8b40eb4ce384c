#include "cutstack/lz78.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace cutstack {

namespace {

inline long ptr_bits(long k) {
    // ceil(log2 k): bits needed to index pointers 0..k-1
    long b = 0;
    while ((1L << b) < k) ++b;
    return b;
}

class BitWriter {
public:
    void push(int bit) {
        if (used_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<uint8_t>(1u << (used_ % 8));
        ++used_;
    }
    void push_value(unsigned long v, long nbits) {
        for (long i = nbits - 1; i >= 0; --i) push(static_cast<int>((v >> i) & 1u));
    }
    std::vector<uint8_t> take() { return std::move(bytes_); }
    size_t bits() const { return used_; }

private:
    std::vector<uint8_t> bytes_;
    size_t used_ = 0;
};

class BitReader {
public:
    BitReader(const std::vector<uint8_t>& bytes, size_t bit_count)
        : bytes_(bytes), total_(bit_count) {}
    bool exhausted() const { return pos_ >= total_; }
    size_t remaining() const { return total_ - pos_; }
    int next() {
        int b = (bytes_[pos_ / 8] >> (pos_ % 8)) & 1;
        ++pos_;
        return b;
    }
    unsigned long next_value(long nbits) {
        unsigned long v = 0;
        for (long i = 0; i < nbits; ++i) v = (v << 1) | static_cast<unsigned long>(next());
        return v;
    }

private:
    const std::vector<uint8_t>& bytes_;
    size_t total_;
    size_t pos_ = 0;
};

struct TrieNode {
    long id;
    TrieNode* child[2] = {nullptr, nullptr};
    explicit TrieNode(long i) : id(i) {}
};

} // namespace

Lz78Result lz78_encode(const std::vector<int>& bits) {
    Lz78Result out;
    std::vector<std::unique_ptr<TrieNode>> arena;
    arena.push_back(std::make_unique<TrieNode>(0));
    TrieNode* root = arena[0].get();
    TrieNode* cur = root;
    BitWriter w;
    long phrases = 0;
    for (int b : bits) {
        if (cur->child[b]) {
            cur = cur->child[b];
            continue;
        }
        ++phrases;
        w.push_value(static_cast<unsigned long>(cur->id), ptr_bits(phrases));
        w.push(b);
        arena.push_back(std::make_unique<TrieNode>(phrases));
        cur->child[b] = arena.back().get();
        cur = root;
    }
    if (cur != root) {
        // partial final phrase: pointer only
        w.push_value(static_cast<unsigned long>(cur->id), ptr_bits(phrases + 1));
    }
    out.phrases = phrases;
    out.codelength_bits = static_cast<long>(w.bits());
    out.encoded = w.take();
    return out;
}

long lz78_codelength(const std::vector<int>& bits) { return lz78_encode(bits).codelength_bits; }

std::vector<int> lz78_decode(const std::vector<uint8_t>& encoded, size_t bit_count) {
    BitReader r(encoded, bit_count);
    std::vector<std::vector<int>> dict; // phrase id -> content; id 0 = empty
    dict.emplace_back();
    std::vector<int> out;
    while (!r.exhausted()) {
        long k = static_cast<long>(dict.size()); // the phrase being decoded, 1-indexed
        long pb = ptr_bits(k);
        if (r.remaining() < static_cast<size_t>(pb))
            throw std::runtime_error("lz78 stream truncated inside a pointer");
        unsigned long ptr = r.next_value(pb);
        if (ptr >= dict.size()) throw std::runtime_error("lz78 pointer out of range");
        if (r.exhausted()) {
            // partial final phrase
            out.insert(out.end(), dict[ptr].begin(), dict[ptr].end());
            break;
        }
        int innov = r.next();
        std::vector<int> phrase = dict[ptr];
        phrase.push_back(innov);
        out.insert(out.end(), phrase.begin(), phrase.end());
        dict.push_back(std::move(phrase));
    }
    return out;
}

std::vector<long> lz78_running_codelength(const std::vector<int>& bits) {
    std::vector<long> out;
    out.reserve(bits.size());
    Lz78Stream s;
    for (int b : bits) {
        s.push(b);
        out.push_back(s.codelength());
    }
    return out;
}

struct Lz78Stream::Node {
    long id;
    Node* child[2] = {nullptr, nullptr};
    explicit Node(long i) : id(i) {}
};

Lz78Stream::Lz78Stream() {
    root_ = new Node(0);
    cur_ = root_;
}

Lz78Stream::~Lz78Stream() {
    // iterative teardown (the trie can be deep on periodic inputs)
    std::vector<Node*> stack{root_};
    while (!stack.empty()) {
        Node* n = stack.back();
        stack.pop_back();
        if (n->child[0]) stack.push_back(n->child[0]);
        if (n->child[1]) stack.push_back(n->child[1]);
        delete n;
    }
}

void Lz78Stream::push(int bit) {
    ++n_;
    if (cur_->child[bit]) {
        cur_ = cur_->child[bit];
        ++depth_;
        return;
    }
    ++phrases_;
    full_bits_ += ptr_bits(phrases_) + 1;
    cur_->child[bit] = new Node(phrases_);
    cur_ = root_;
    depth_ = 0;
}

long Lz78Stream::codelength() const {
    if (depth_ == 0) return full_bits_;
    return full_bits_ + ptr_bits(phrases_ + 1); // pending partial phrase pointer
}

} // namespace cutstack
