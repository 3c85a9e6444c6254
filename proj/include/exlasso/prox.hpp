#pragma once

#include <vector>

#include "exlasso/groups.hpp"
#include "exlasso/types.hpp"

namespace exlasso {

/// sign(z) * max(|z| - t, 0).
inline double soft_threshold(double z, double t) {
    if (z > t) return z - t;
    if (z < -t) return z + t;
    return 0.0;
}

struct ProxRequest {
    Vector point;               // z to be projected
    double lambda = 0.0;
    PartitionPtr partition;
    double inner_tolerance = 1e-10;  // max coordinate change per sweep
    int max_sweeps = 10000;
    const Vector* warm_start = nullptr;  // full-length; defaults to z
};

struct ProxResult {
    Vector minimizer;
    std::vector<int> sweeps_used;       // per group
    std::vector<double> final_change;   // per group, last sweep's max change
    bool max_sweeps_hit = false;
};

/// Minimizer of (1/2)||b - z_g||^2 + (lambda/2) * ||b||_1^2 by cyclic
/// coordinate descent in ascending index order. `initial` defaults to z_g.
/// Unique by strong convexity; if max_sweeps is exhausted the current
/// iterate is returned and *hit_cap set.
Vector prox_group(const Vector& z_g, double lambda, double tol, int max_sweeps,
                  int* sweeps_used = nullptr, double* final_change = nullptr,
                  bool* hit_cap = nullptr, const Vector* initial = nullptr);

/// Group-separable prox of the exclusive penalty: concatenation of
/// prox_group over the partition's groups.
ProxResult prox_exclusive(const ProxRequest& request);

}  // namespace exlasso
