#pragma once

#include <functional>
#include <span>
#include <vector>

#include "curvlab/poly.hpp"
#include "curvlab/polymat.hpp"
#include "curvlab/ratmat.hpp"

namespace curvlab {

enum class SlotKind { BaseCo, BaseContra, FiberIn, FiberOut };

struct Slot {
    SlotKind kind;
    int dim;
    friend bool operator==(const Slot&, const Slot&) = default;
};

/// Indexed family of PolyScalar components over declared slots. Covers forms,
/// metrics, almost complex structures and curvature tensors; connection
/// coefficients are usually kept as std::vector<PolyMatrix> instead and
/// converted here for reporting.
class TensorPolyField {
public:
    TensorPolyField() : base_dim_(0) {}
    TensorPolyField(int base_dim, std::vector<Slot> slots)
        : base_dim_(base_dim), slots_(std::move(slots)) {
        size_t total = 1;
        for (const auto& s : slots_) {
            if (s.dim <= 0) throw argument_error("slot dimension must be positive");
            if ((s.kind == SlotKind::BaseCo || s.kind == SlotKind::BaseContra) &&
                s.dim != base_dim)
                throw argument_error("base slot dimension must equal base_dim");
            total *= size_t(s.dim);
        }
        comps_.assign(total, PolyScalar(base_dim_));
    }

    int base_dim() const { return base_dim_; }
    const std::vector<Slot>& slots() const { return slots_; }
    int order() const { return static_cast<int>(slots_.size()); }

    PolyScalar& at(std::span<const int> idx) { return comps_[flatten(idx)]; }
    const PolyScalar& at(std::span<const int> idx) const { return comps_[flatten(idx)]; }
    PolyScalar& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx)); }
    const PolyScalar& at(std::initializer_list<int> idx) const {
        return at(std::span<const int>(idx));
    }

    bool is_zero() const {
        for (const auto& p : comps_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const TensorPolyField& a, const TensorPolyField& b) {
        return a.base_dim_ == b.base_dim_ && a.slots_ == b.slots_ && a.comps_ == b.comps_;
    }

    TensorPolyField& operator+=(const TensorPolyField& o) {
        check_same_shape(o);
        for (size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
        return *this;
    }
    TensorPolyField& operator-=(const TensorPolyField& o) {
        check_same_shape(o);
        for (size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
        return *this;
    }
    friend TensorPolyField operator+(TensorPolyField a, const TensorPolyField& b) {
        return a += b;
    }
    friend TensorPolyField operator-(TensorPolyField a, const TensorPolyField& b) {
        return a -= b;
    }
    friend TensorPolyField operator*(const Rat& c, const TensorPolyField& t) {
        TensorPolyField r = t;
        for (auto& p : r.comps_) p = c * p;
        return r;
    }
    friend TensorPolyField operator*(const PolyScalar& f, const TensorPolyField& t) {
        TensorPolyField r = t;
        for (auto& p : r.comps_) p = f * p;
        return r;
    }

    void for_each_index(const std::function<void(std::span<const int>)>& fn) const {
        std::vector<int> idx(slots_.size(), 0);
        for_each_rec(0, idx, fn);
    }

    /// Builds from a component generator.
    static TensorPolyField build(int base_dim, std::vector<Slot> slots,
                                 const std::function<PolyScalar(std::span<const int>)>& gen) {
        TensorPolyField t(base_dim, std::move(slots));
        t.for_each_index([&](std::span<const int> idx) {
            t.comps_[t.flatten(idx)] = gen(idx);
        });
        return t;
    }

    /// Exact pointwise evaluation: same shape, constant components.
    TensorPolyField eval_at(const std::vector<Rat>& point) const {
        TensorPolyField r(base_dim_, slots_);
        for (size_t i = 0; i < comps_.size(); ++i)
            r.comps_[i] = PolyScalar::constant(base_dim_, comps_[i].eval(point));
        return r;
    }

    /// Identically antisymmetric under every swap of the slot pair (i, j)?
    bool is_antisymmetric_pair(int i, int j) const {
        return check_pair(i, j, /*antisym=*/true);
    }
    bool is_symmetric_pair(int i, int j) const { return check_pair(i, j, /*antisym=*/false); }

    /// Fully antisymmetric across slots [first, first+count)?
    bool is_fully_antisymmetric(int first, int count) const {
        for (int k = 0; k + 1 < count; ++k)
            if (!is_antisymmetric_pair(first + k, first + k + 1)) return false;
        return true;
    }

private:
    size_t flatten(std::span<const int> idx) const {
        if (idx.size() != slots_.size()) throw argument_error("index arity mismatch");
        size_t pos = 0;
        for (size_t k = 0; k < slots_.size(); ++k) {
            if (idx[k] < 0 || idx[k] >= slots_[k].dim)
                throw argument_error("tensor index out of range");
            pos = pos * size_t(slots_[k].dim) + size_t(idx[k]);
        }
        return pos;
    }

    void for_each_rec(size_t k, std::vector<int>& idx,
                      const std::function<void(std::span<const int>)>& fn) const {
        if (k == slots_.size()) {
            fn(idx);
            return;
        }
        for (int v = 0; v < slots_[k].dim; ++v) {
            idx[k] = v;
            for_each_rec(k + 1, idx, fn);
        }
    }

    bool check_pair(int i, int j, bool antisym) const {
        if (i < 0 || j < 0 || i >= order() || j >= order() || i == j)
            throw argument_error("bad slot pair");
        if (slots_[i].dim != slots_[j].dim) return false;
        bool ok = true;
        for_each_index([&](std::span<const int> idx) {
            if (!ok) return;
            std::vector<int> swapped(idx.begin(), idx.end());
            std::swap(swapped[i], swapped[j]);
            const PolyScalar& a = at(idx);
            const PolyScalar& b = at(std::span<const int>(swapped));
            if (antisym ? !(a == -b) : !(a == b)) ok = false;
        });
        return ok;
    }

    void check_same_shape(const TensorPolyField& o) const {
        if (base_dim_ != o.base_dim_ || slots_ != o.slots_)
            throw argument_error("tensor shape mismatch");
    }

    int base_dim_;
    std::vector<Slot> slots_;
    std::vector<PolyScalar> comps_;
};

} // namespace curvlab
