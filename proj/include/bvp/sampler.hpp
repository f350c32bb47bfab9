#pragma once

#include <cstdint>

#include "bvp/types.hpp"

namespace bvp {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  // The rejection sampler may draw at most max_rejection_rounds * n candidate
  // rows before raising sampling_stall_error.
  std::size_t max_rejection_rounds = 1000;
};

// Minimum construction: U0 ~ Pa(0,1,alpha0), Uj ~ Pa(mu_j,sigma_j,alpha_j),
// X1 = min(sigma1*U0 + mu1, U1), X2 = min(sigma2*U0 + mu2, U2).
// One uniform stream, fixed draw order (u0, u1, u2 per row).
BivariateSample sample_bvpa(const Params7& p, const SamplerConfig& cfg);
BivariateSample sample_bvpa(std::size_t n, const Params7& p,
                            std::uint64_t seed);

// Absolutely continuous law by rejection: diagonal rows are discarded until
// n rows are accepted. Deterministic given the seed.
BivariateSample sample_bvpac(const Params7& p, const SamplerConfig& cfg);
BivariateSample sample_bvpac(std::size_t n, const Params7& p,
                             std::uint64_t seed);

}  // namespace bvp
