#pragma once

#include <cstdint>
#include <random>

namespace hetsim {

using Rng = std::mt19937_64;

// Stream identifiers mixed into derive_seed. User streams are 1 + user id.
inline constexpr std::uint64_t kTopologyStream = 0x7070'0000'0000'0001ULL;

/// Deterministic seed for an independent substream.
///
/// Chains splitmix64 over (base, realization, stream) so that every
/// (realization, stream) pair maps to a distinct, well-mixed seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t realization, std::uint64_t stream);

double uniform_real(Rng& rng, double lo, double hi);

}  // namespace hetsim
