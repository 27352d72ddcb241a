#include "orbhodge/filtration.hpp"

#include <algorithm>

namespace orbhodge {

IncreasingFiltration::IncreasingFiltration(std::size_t ambient_dim, int first, std::vector<Subspace> steps)
    : ambient_dim_(ambient_dim), first_(first), steps_(std::move(steps)) {
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (steps_[k].ambient_dim() != ambient_dim_) throw DimensionError("filtration step has wrong ambient dimension");
        if (k > 0 && !contains(steps_[k], steps_[k - 1]))
            throw std::invalid_argument("increasing filtration is not monotone at index " +
                                        std::to_string(first_ + static_cast<int>(k)));
    }
}

Subspace IncreasingFiltration::operator[](int l) const {
    if (l < first_) return Subspace::zero(ambient_dim_);
    if (l > last()) return Subspace::full(ambient_dim_);
    return steps_[static_cast<std::size_t>(l - first_)];
}

std::vector<int> IncreasingFiltration::jumps() const {
    std::vector<int> out;
    for (int l = first_; l <= last() + 1; ++l)
        if ((*this)[l].dim() != (*this)[l - 1].dim()) out.push_back(l);
    return out;
}

DecreasingFiltration::DecreasingFiltration(std::size_t ambient_dim, int first, std::vector<Subspace> steps)
    : ambient_dim_(ambient_dim), first_(first), steps_(std::move(steps)) {
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (steps_[k].ambient_dim() != ambient_dim_) throw DimensionError("filtration step has wrong ambient dimension");
        if (k > 0 && !contains(steps_[k - 1], steps_[k]))
            throw std::invalid_argument("decreasing filtration is not monotone at index " +
                                        std::to_string(first_ + static_cast<int>(k)));
    }
}

Subspace DecreasingFiltration::operator[](int p) const {
    if (p < first_) return Subspace::full(ambient_dim_);
    if (p > last()) return Subspace::zero(ambient_dim_);
    return steps_[static_cast<std::size_t>(p - first_)];
}

bool operator==(const IncreasingFiltration &a, const IncreasingFiltration &b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    int lo = std::min(a.first(), b.first()) - 1;
    int hi = std::max(a.last(), b.last()) + 1;
    for (int l = lo; l <= hi; ++l)
        if (!(a[l] == b[l])) return false;
    return true;
}

bool operator==(const DecreasingFiltration &a, const DecreasingFiltration &b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    int lo = std::min(a.first(), b.first()) - 1;
    int hi = std::max(a.last(), b.last()) + 1;
    for (int p = lo; p <= hi; ++p)
        if (!(a[p] == b[p])) return false;
    return true;
}

IncreasingFiltration transform(const QiMatrix &g, const IncreasingFiltration &w) {
    std::vector<Subspace> steps;
    for (int l = w.first(); l <= w.last(); ++l) steps.push_back(apply(g, w[l]));
    return {w.ambient_dim(), w.first(), std::move(steps)};
}

DecreasingFiltration transform(const QiMatrix &g, const DecreasingFiltration &f) {
    std::vector<Subspace> steps;
    for (int p = f.first(); p <= f.last(); ++p) steps.push_back(apply(g, f[p]));
    return {f.ambient_dim(), f.first(), std::move(steps)};
}

} // namespace orbhodge
