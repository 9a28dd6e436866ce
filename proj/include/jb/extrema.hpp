// Extremum localization: the windows (N_-1, N_+1) and (N'_-1, N'_+1) that
// trap the local maxima of Z^2 and M, plus a deterministic global max
// search (dense Chebyshev grid, golden-section refinement of every
// three-point bracket).

#pragma once

#include <functional>
#include <vector>

#include "jb/params.hpp"

namespace jb {

struct LocalizationWindows {
    double n_minus, n_plus;    // N_j = j (cos(tau + j omega) - (5/17) eps_j)
    double np_minus, np_plus;  // N'_j = j (cos(tau' + j omega) - (3/10) eps'_j)
    double eps_minus, eps_plus;
    double epsp_minus, epsp_plus;
};

// Needs k >= 1 (tau' degenerates to pi/2 at k = 0).
LocalizationWindows localization_windows(const DerivedParams& dp);

struct MaxResult {
    double x = 0.0;
    double value = 0.0;
};

// All local maxima of f on [lo, hi]: sample on a Chebyshev grid of n points
// (endpoints included), golden-refine every bracket where the middle sample
// beats both neighbors.  n is clamped up to 100 (k+1) by the callers; the
// refinement of every bracket, not just the best few, is what makes flat
// near-tied envelopes come out right.  Deterministic for fixed inputs.
std::vector<MaxResult> find_local_maxima(const std::function<double(double)>& f, double lo,
                                         double hi, int n, double x_tol = 1e-12);

// Largest of the refined local maxima and, when include_endpoints is set,
// the endpoint values themselves.
MaxResult global_max(const std::function<double(double)>& f, double lo, double hi, int n,
                     bool include_endpoints = true, double x_tol = 1e-12);

int default_grid_size(int k);  // 100 (k+1) + 1

}  // namespace jb
