#ifndef AUXZETA_SWEEP_HPP
#define AUXZETA_SWEEP_HPP

#include "auxzeta/bounds.hpp"
#include "auxzeta/log_complex.hpp"
#include "auxzeta/quadrature.hpp"

#include <string>
#include <vector>

namespace auxzeta {

/// Everything the CLI reports for one trivial zero.
struct SweepRecord {
    int n = 0;
    DecompositionReport decomposition;
    BoundReport bounds;
    Certificate certificate;
    // |I_n| / |asymptotic_I_normalized(n)|; tends to 1.
    double asymptotic_ratio = 0.0;
    LogComplex rprime;
    std::string error;  // non-empty if the per-n evaluation threw
};

SweepRecord analyze(int n, const QuadratureConfig &cfg, const LemmaConstants &lemma);

/// Reference implementation: one n after another.
std::vector<SweepRecord> sweep_serial(int n_start, int n_end, const QuadratureConfig &cfg,
                                      const LemmaConstants &lemma);

/// OpenMP fan-out over n. Each slot is written by exactly one thread, so the
/// result is identical to sweep_serial for any worker count.
std::vector<SweepRecord> sweep_parallel(int n_start, int n_end, const QuadratureConfig &cfg,
                                        const LemmaConstants &lemma, int workers);

bool all_verified(const std::vector<SweepRecord> &records);

} // namespace auxzeta

#endif // AUXZETA_SWEEP_HPP
