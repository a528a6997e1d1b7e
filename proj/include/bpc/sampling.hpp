#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bpc/d1_codec.hpp"
#include "bpc/d2_codec.hpp"
#include "bpc/permutation.hpp"
#include "bpc/tn_codec.hpp"

namespace bpc::sampling {

using Rng = std::mt19937_64;

Permutation random_permutation(std::size_t n, Rng& rng);

d1::Input random_d1_input(std::size_t n, Rng& rng);
d2::Input random_d2_input(const d2::Params& params, Rng& rng);

/// Random orderings plus a selector drawn uniformly, step by step, from the
/// non-empty sets of the mandated half; always encodable.
tn::Input random_tn_input(const tn::Params& params, Rng& rng);

/// All ((n/2)!)^2 inputs, gamma1 rank-major.
std::vector<d1::Input> all_d1_inputs(std::size_t n);

/// All ((n/N)!)^N inputs.
std::vector<d2::Input> all_d2_inputs(const d2::Params& params);

/// Every ordering tuple combined with every selector the encoder accepts.
std::vector<tn::Input> all_tn_inputs(const tn::Params& params);

}  // namespace bpc::sampling
