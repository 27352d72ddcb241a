#pragma once

#include "orbhodge/subspace.hpp"

#include <vector>

namespace orbhodge {

/// W_l = 0 for l < first(), steps for first() <= l <= last(), whole space
/// for l > last().
class IncreasingFiltration {
public:
    IncreasingFiltration() = default;
    /// Throws std::invalid_argument unless the steps increase by containment.
    IncreasingFiltration(std::size_t ambient_dim, int first, std::vector<Subspace> steps);

    std::size_t ambient_dim() const { return ambient_dim_; }
    int first() const { return first_; }
    int last() const { return first_ + static_cast<int>(steps_.size()) - 1; }
    Subspace operator[](int l) const;

    /// Indices where W_l differs from W_{l-1}.
    std::vector<int> jumps() const;

private:
    std::size_t ambient_dim_ = 0;
    int first_ = 0;
    std::vector<Subspace> steps_;
};

/// F^p = whole space for p < first(), steps for first() <= p <= last(), 0
/// for p > last().
class DecreasingFiltration {
public:
    DecreasingFiltration() = default;
    /// Throws std::invalid_argument unless the steps decrease by containment.
    DecreasingFiltration(std::size_t ambient_dim, int first, std::vector<Subspace> steps);

    std::size_t ambient_dim() const { return ambient_dim_; }
    int first() const { return first_; }
    int last() const { return first_ + static_cast<int>(steps_.size()) - 1; }
    Subspace operator[](int p) const;

private:
    std::size_t ambient_dim_ = 0;
    int first_ = 0;
    std::vector<Subspace> steps_;
};

bool operator==(const IncreasingFiltration &a, const IncreasingFiltration &b);
bool operator==(const DecreasingFiltration &a, const DecreasingFiltration &b);

/// Image of every step under an invertible matrix.
IncreasingFiltration transform(const QiMatrix &g, const IncreasingFiltration &w);
DecreasingFiltration transform(const QiMatrix &g, const DecreasingFiltration &f);

} // namespace orbhodge
