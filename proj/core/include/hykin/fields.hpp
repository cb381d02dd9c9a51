#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hykin/grid.hpp"

namespace hykin {

/// Per-cell conserved hydrodynamic state (rho, rho*ux, rho*uy, E).
struct ConservedState {
    double rho = 0.0;
    double mx = 0.0;
    double my = 0.0;
    double E = 0.0;

    double& operator[](int k) { return (&rho)[k]; }
    double operator[](int k) const { return (&rho)[k]; }
};

inline ConservedState operator+(ConservedState a, const ConservedState& b) {
    for (int k = 0; k < 4; ++k) a[k] += b[k];
    return a;
}
inline ConservedState operator-(ConservedState a, const ConservedState& b) {
    for (int k = 0; k < 4; ++k) a[k] -= b[k];
    return a;
}
inline ConservedState operator*(double s, ConservedState a) {
    for (int k = 0; k < 4; ++k) a[k] *= s;
    return a;
}

/// Dense per-cell storage of the Layer-0 state.
struct ConservedField {
    std::vector<ConservedState> u;

    explicit ConservedField(int cells = 0) : u(cells) {}
    ConservedState& operator[](int c) { return u[c]; }
    const ConservedState& operator[](int c) const { return u[c]; }
    int size() const { return int(u.size()); }
};

/// Sparse per-cell velocity distributions. Only cells currently evolved by a
/// kinetic layer own a block; each block is one contiguous run of nv^3
/// values so it can be handed as-is to the collision kernels.
class DistributionField {
public:
    DistributionField() = default;
    DistributionField(int cells, int block_size)
        : block_size_(block_size), blocks_(cells) {}

    int block_size() const { return block_size_; }
    int cells() const { return int(blocks_.size()); }

    bool has(int c) const { return !blocks_[c].empty(); }

    /// Allocates (value-initialized) storage for cell c if absent.
    std::span<double> ensure(int c) {
        if (blocks_[c].empty())
            blocks_[c].assign(block_size_, 0.0);
        return blocks_[c];
    }

    void release(int c) {
        blocks_[c].clear();
        blocks_[c].shrink_to_fit();
    }

    std::span<double> operator[](int c) { return blocks_[c]; }
    std::span<const double> operator[](int c) const { return blocks_[c]; }

    void swap_cell(int c, std::vector<double>& other) { blocks_[c].swap(other); }

private:
    int block_size_ = 0;
    std::vector<std::vector<double>> blocks_;
};

} // namespace hykin
