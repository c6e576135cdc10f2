#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace prs {

// Fixed-universe bitset over object indices 0..n-1. The approximation
// operators reduce to word-wise AND/OR plus popcounts, which is where
// essentially all the reduction time goes.
class ObjectSet {
public:
    ObjectSet() : n_(0) {}
    explicit ObjectSet(std::size_t universe_size)
        : n_(universe_size), words_((universe_size + 63) / 64, 0) {}

    std::size_t universe_size() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }

    bool is_subset_of(const ObjectSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }
    bool intersects(const ObjectSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }
    std::size_t intersection_count(const ObjectSet& other) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & other.words_[k]);
        return c;
    }

    ObjectSet& operator|=(const ObjectSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    ObjectSet& operator&=(const ObjectSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }

    friend bool operator==(const ObjectSet& a, const ObjectSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const ObjectSet& a, const ObjectSet& b) { return !(a == b); }

    std::vector<std::uint32_t> members() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
        return out;
    }

    static ObjectSet of(std::size_t universe_size, std::initializer_list<std::uint32_t> ids) {
        ObjectSet s(universe_size);
        for (auto i : ids) s.set(i);
        return s;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

} // namespace prs
