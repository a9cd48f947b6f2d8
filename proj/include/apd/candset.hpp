#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace apd {

// Fixed-universe bit set over candidate indices [0, size). Intersection,
// union and cardinality run word-parallel; votes and committees use this
// throughout.
class CandSet {
public:
    CandSet() = default;
    explicit CandSet(std::size_t universe)
        : size_(universe), words_((universe + 63) / 64, 0) {}

    static CandSet full(std::size_t universe) {
        CandSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    static CandSet of(std::size_t universe, const std::vector<int>& members) {
        CandSet s(universe);
        for (int c : members) {
            if (c < 0 || static_cast<std::size_t>(c) >= universe)
                throw std::out_of_range("candidate index out of range");
            s.set(static_cast<std::size_t>(c));
        }
        return s;
    }

    std::size_t universe() const { return size_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }
    void set(std::size_t i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_full() const { return count() == size_; }

    std::size_t intersect_count(const CandSet& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(__builtin_popcountll(words_[i] & o.words_[i]));
        return c;
    }

    bool intersects(const CandSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool subset_of(const CandSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    CandSet operator&(const CandSet& o) const { return apply(o, [](auto a, auto b) { return a & b; }); }
    CandSet operator|(const CandSet& o) const { return apply(o, [](auto a, auto b) { return a | b; }); }
    // set difference
    CandSet operator-(const CandSet& o) const { return apply(o, [](auto a, auto b) { return a & ~b; }); }

    CandSet complement() const {
        CandSet r = *this;
        for (auto& w : r.words_) w = ~w;
        r.clear_padding();
        return r;
    }

    friend bool operator==(const CandSet& a, const CandSet& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend bool operator!=(const CandSet& a, const CandSet& b) { return !(a == b); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t i = 0; i < size_; ++i)
            if (test(i)) out.push_back(static_cast<int>(i));
        return out;
    }

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;

    template <class F>
    CandSet apply(const CandSet& o, F f) const {
        CandSet r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
        r.clear_padding();
        return r;
    }

    void clear_padding() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (1ULL << (size_ % 64)) - 1;
    }
};

struct CandSetHash {
    std::size_t operator()(const CandSet& s) const { return s.hash(); }
};

}  // namespace apd
