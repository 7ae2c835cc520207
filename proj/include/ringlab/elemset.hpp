#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ringlab {

// Membership bitset over element indices of one ring or module table.
// Sets are only comparable when they belong to tables of the same size.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

    uint32_t universe() const { return n_; }

    bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : w_) c += static_cast<uint32_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    bool full() const { return count() == n_; }

    bool subset_of(const ElemSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const ElemSet& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    ElemSet operator&(const ElemSet& o) const {
        ElemSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    ElemSet operator|(const ElemSet& o) const {
        ElemSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    ElemSet complement() const {
        ElemSet r(n_);
        for (uint32_t i = 0; i < n_; ++i)
            if (!test(i)) r.set(i);
        return r;
    }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    // Canonical order: by cardinality, then by word content.
    bool operator<(const ElemSet& o) const {
        uint32_t a = count(), b = o.count();
        if (a != b) return a < b;
        return w_ < o.w_;
    }

    // Members in increasing index order.
    std::vector<uint32_t> elements() const {
        std::vector<uint32_t> out;
        out.reserve(count());
        for (uint32_t i = 0; i < n_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    size_t hash() const {
        size_t h = n_;
        for (uint64_t w : w_) h = h * 1099511628211ull ^ w;
        return h;
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct ElemSetHash {
    size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace ringlab
