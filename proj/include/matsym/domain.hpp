#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace matsym {

using Value = int;

/// Finite set of integers backed by a bitmap over a window that is fixed
/// when the set is built. Filtering only ever removes values, so a domain
/// never outgrows its window. The window spans at most kMaxWidth
/// consecutive integers, which covers every variable in this library
/// (cell values, DFA symbols, first-occurrence indices).
class DomainSet {
public:
    static constexpr int kMaxWidth = 256;
    static constexpr int kWords = kMaxWidth / 64;

    DomainSet() = default;

    /// Inclusive range lo..hi.
    static DomainSet range(Value lo, Value hi) {
        if (lo > hi) throw std::invalid_argument("DomainSet::range: lo > hi");
        check_width(lo, hi);
        DomainSet d;
        d.base_ = lo;
        d.count_ = hi - lo + 1;
        for (int k = 0; k < d.count_; ++k) d.bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
        return d;
    }

    static DomainSet singleton(Value v) { return range(v, v); }

    static DomainSet from(std::span<const Value> vs) {
        if (vs.empty()) return {};
        auto [lo_it, hi_it] = std::minmax_element(vs.begin(), vs.end());
        check_width(*lo_it, *hi_it);
        DomainSet d;
        d.base_ = *lo_it;
        for (Value v : vs) {
            const int k = v - d.base_;
            const std::uint64_t bit = std::uint64_t{1} << (k & 63);
            if (!(d.bits_[k >> 6] & bit)) {
                d.bits_[k >> 6] |= bit;
                ++d.count_;
            }
        }
        return d;
    }

    static DomainSet of(std::initializer_list<Value> vs) {
        return from(std::span<const Value>(vs.begin(), vs.size()));
    }

    bool empty() const { return count_ == 0; }
    int size() const { return count_; }
    bool is_singleton() const { return count_ == 1; }

    bool contains(Value v) const {
        const int k = v - base_;
        if (count_ == 0 || k < 0 || k >= kMaxWidth) return false;
        return (bits_[k >> 6] >> (k & 63)) & 1;
    }

    Value min() const {
        assert(count_ > 0);
        for (int w = 0; w < kWords; ++w)
            if (bits_[w]) return base_ + w * 64 + std::countr_zero(bits_[w]);
        return 0;  // unreachable
    }

    Value max() const {
        assert(count_ > 0);
        for (int w = kWords - 1; w >= 0; --w)
            if (bits_[w]) return base_ + w * 64 + 63 - std::countl_zero(bits_[w]);
        return 0;  // unreachable
    }

    /// The sole member of a singleton set.
    Value single_value() const {
        assert(count_ == 1);
        return min();
    }

    /// Returns true when v was present.
    bool remove(Value v) {
        if (!contains(v)) return false;
        const int k = v - base_;
        bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
        --count_;
        return true;
    }

    /// Keep only values <= v. Returns true when the set changed.
    bool remove_above(Value v) {
        if (count_ == 0 || v >= max()) return false;
        if (v < base_) {
            clear();
            return true;
        }
        const int k = v - base_;
        const int w = k >> 6, b = k & 63;
        if (b < 63) bits_[w] &= (std::uint64_t{1} << (b + 1)) - 1;
        for (int i = w + 1; i < kWords; ++i) bits_[i] = 0;
        recount();
        return true;
    }

    /// Keep only values >= v. Returns true when the set changed.
    bool remove_below(Value v) {
        if (count_ == 0 || v <= min()) return false;
        if (v > base_ + kMaxWidth - 1) {
            clear();
            return true;
        }
        const int k = v - base_;
        const int w = k >> 6, b = k & 63;
        bits_[w] &= ~std::uint64_t{0} << b;
        for (int i = 0; i < w; ++i) bits_[i] = 0;
        recount();
        return true;
    }

    /// Intersect with {v}: the set becomes {v} when v is present, empty
    /// otherwise. Returns true when the set changed.
    bool assign(Value v) {
        if (!contains(v)) {
            const bool changed = count_ != 0;
            clear();
            return changed;
        }
        if (count_ == 1) return false;
        clear();
        const int k = v - base_;
        bits_[k >> 6] = std::uint64_t{1} << (k & 63);
        count_ = 1;
        return true;
    }

    /// Keep only values also present in other. Returns true when changed.
    bool intersect(const DomainSet& other) {
        bool changed = false;
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = bits_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const Value v = base_ + w * 64 + b;
                if (!other.contains(v)) {
                    bits_[w] &= ~(std::uint64_t{1} << b);
                    --count_;
                    changed = true;
                }
            }
        }
        return changed;
    }

    std::vector<Value> values() const {
        std::vector<Value> out;
        out.reserve(count_);
        for_each([&](Value v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = bits_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                f(base_ + w * 64 + b);
            }
        }
    }

    friend bool operator==(const DomainSet& a, const DomainSet& b) {
        if (a.count_ != b.count_) return false;
        if (a.count_ == 0) return true;
        if (a.base_ == b.base_) return a.bits_ == b.bits_;
        return a.values() == b.values();
    }

private:
    static void check_width(Value lo, Value hi) {
        if (static_cast<long long>(hi) - lo >= kMaxWidth)
            throw std::invalid_argument("DomainSet: value window wider than capacity");
    }

    void clear() {
        bits_ = {};
        count_ = 0;
    }

    void recount() {
        count_ = 0;
        for (int w = 0; w < kWords; ++w) count_ += std::popcount(bits_[w]);
    }

    Value base_ = 0;
    int count_ = 0;
    std::array<std::uint64_t, kWords> bits_{};
};

}  // namespace matsym
