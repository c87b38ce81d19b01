#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetsim/geometry.hpp"
#include "hetsim/random.hpp"

namespace hetsim {

enum class CellKind { kMacro, kPico };

enum class LayoutKind { kMoNet, kCoe, kUdc };

std::string_view to_string(LayoutKind kind);

struct Cell {
  int id = 0;
  Point2D center;
  double radius = 0.0;
  CellKind kind = CellKind::kMacro;

  bool operator==(const Cell&) const = default;
};

// One macro cell plus non-overlapping pico cells inside it. Immutable once
// built; pico ids equal their index.
class Topology {
 public:
  Topology(LayoutKind kind, Cell macro, std::vector<Cell> picos);

  LayoutKind kind() const noexcept { return kind_; }
  const Cell& macro() const noexcept { return macro_; }
  std::span<const Cell> picos() const noexcept { return picos_; }
  const Cell& pico(int id) const { return picos_.at(static_cast<std::size_t>(id)); }
  int pico_count() const noexcept { return static_cast<int>(picos_.size()); }

  bool operator==(const Topology&) const = default;

 private:
  LayoutKind kind_;
  Cell macro_;
  std::vector<Cell> picos_;
};

inline constexpr int kUdcPlacementAttempts = 10'000;

// Macro cell tangential to both axes, no picos.
Topology build_monet(double macro_radius);

// Picos on the ring of radius (macro_radius - pico_radius), each tangential to
// the macro edge and to its neighbours, first one on the positive x-axis.
// Throws kRingOverflow if n_picos tangential discs do not fit on the ring.
Topology build_coe(double macro_radius, double pico_radius, int n_picos);

// Picos uniform over the disc of radius (macro_radius - pico_radius), rejected
// while closer than 2 * pico_radius to an already placed pico. Throws
// kPlacementFailure once a single pico exhausts max_attempts draws.
Topology build_udc(double macro_radius, double pico_radius, int n_picos, Rng& rng,
                   int max_attempts = kUdcPlacementAttempts);

// Pico whose disc strictly contains p (distance < radius); lowest id on ties.
std::optional<int> containing_pico(const Topology& topology, Point2D p);

// Containment in the macro disc and pairwise pico separation >= 2r.
bool satisfies_invariants(const Topology& topology, double tolerance = 1e-9);

// {"kind", "macro": {x, y, r}, "picos": [{id, x, y, r}]}
std::string topology_to_json(const Topology& topology);

}  // namespace hetsim
