#include "auxzeta/sweep.hpp"

#include "auxzeta/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auxzeta {

namespace {

void require_range(int n_start, int n_end) {
    if (n_start < 1 || n_end < n_start)
        throw std::invalid_argument("n range must satisfy 1 <= n_start <= n_end");
}

} // namespace

SweepRecord analyze(int n, const QuadratureConfig &cfg, const LemmaConstants &lemma) {
    SweepRecord rec;
    rec.n = n;
    rec.certificate.n = n;
    try {
        const InPieces pieces = integrate_I_n_pieces(n, cfg);
        rec.decomposition = decompose_pieces(n, pieces);
        rec.bounds = bound_report(n);
        rec.certificate = certify_from(rec.decomposition, lemma);
        rec.asymptotic_ratio = std::abs(rec.decomposition.I_n) / std::abs(asymptotic_I_normalized(n));
        rec.rprime = rprime_from_I(n, rec.decomposition.I_n);
    } catch (const std::exception &e) {
        rec.error = e.what();
        rec.certificate.verified = false;
        rec.certificate.failure = e.what();
    }
    return rec;
}

std::vector<SweepRecord> sweep_serial(int n_start, int n_end, const QuadratureConfig &cfg,
                                      const LemmaConstants &lemma) {
    require_range(n_start, n_end);
    std::vector<SweepRecord> out;
    out.reserve(static_cast<std::size_t>(n_end - n_start + 1));
    for (int n = n_start; n <= n_end; ++n)
        out.push_back(analyze(n, cfg, lemma));
    return out;
}

std::vector<SweepRecord> sweep_parallel(int n_start, int n_end, const QuadratureConfig &cfg,
                                        const LemmaConstants &lemma, int workers) {
    require_range(n_start, n_end);
    const int count = n_end - n_start + 1;
    std::vector<SweepRecord> out(static_cast<std::size_t>(count));
    const int threads = std::max(1, workers);
    // Cost grows with n, so hand out small chunks dynamically.
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = analyze(n_start + i, cfg, lemma);
    (void)threads;
    return out;
}

bool all_verified(const std::vector<SweepRecord> &records) {
    return std::all_of(records.begin(), records.end(),
                       [](const SweepRecord &r) { return r.error.empty() && r.certificate.verified; });
}

} // namespace auxzeta
