#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "mops/errors.hpp"

namespace mops {

// Multi-index n = (n_1, ..., n_r); |n| is the sum of the entries.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw ValidationError("multi-index must have r >= 1");
    }
    static MultiIndex zeros(size_t r) { return MultiIndex(std::vector<unsigned>(r, 0)); }
    static MultiIndex diagonal(size_t r, unsigned n) {
        return MultiIndex(std::vector<unsigned>(r, n));
    }

    size_t r() const { return e_.size(); }
    unsigned operator[](size_t j) const { return e_[j]; }
    const std::vector<unsigned>& entries() const { return e_; }

    unsigned long size() const {
        return std::accumulate(e_.begin(), e_.end(), 0ul);
    }

    MultiIndex plus(size_t k) const {
        std::vector<unsigned> v = e_;
        v[k] += 1;
        return MultiIndex(std::move(v));
    }
    MultiIndex minus(size_t k) const {
        if (e_[k] == 0) throw ValidationError("multi-index entry underflow");
        std::vector<unsigned> v = e_;
        v[k] -= 1;
        return MultiIndex(std::move(v));
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }

  private:
    std::vector<unsigned> e_;
};

struct MultiIndexHash {
    size_t operator()(const MultiIndex& n) const {
        size_t h = n.r();
        for (unsigned v : n.entries()) h = h * 1000003u + v + 0x9e3779b9u;
        return h;
    }
};

}  // namespace mops
