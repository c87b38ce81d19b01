#include "hetsim/topology.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "hetsim/errors.hpp"

namespace hetsim {

std::string_view to_string(LayoutKind kind) {
  switch (kind) {
    case LayoutKind::kMoNet: return "monet";
    case LayoutKind::kCoe: return "coe";
    case LayoutKind::kUdc: return "udc";
  }
  return "unknown";
}

Topology::Topology(LayoutKind kind, Cell macro, std::vector<Cell> picos)
    : kind_(kind), macro_(macro), picos_(std::move(picos)) {}

namespace {

Cell make_macro(double macro_radius) {
  if (!(macro_radius > 0.0) || !std::isfinite(macro_radius)) {
    throw Error(ErrorCode::kValidationError, "macro_radius must be positive and finite");
  }
  return Cell{0, {macro_radius, macro_radius}, macro_radius, CellKind::kMacro};
}

void check_pico_radius(double macro_radius, double pico_radius) {
  if (!(pico_radius > 0.0) || !(pico_radius < macro_radius)) {
    throw Error(ErrorCode::kValidationError, "pico_radius must lie in (0, macro_radius)");
  }
}

}  // namespace

Topology build_monet(double macro_radius) { return Topology(LayoutKind::kMoNet, make_macro(macro_radius), {}); }

Topology build_coe(double macro_radius, double pico_radius, int n_picos) {
  const Cell macro = make_macro(macro_radius);
  if (n_picos < 0) throw Error(ErrorCode::kValidationError, "n_picos must be non-negative");
  if (n_picos == 0) return Topology(LayoutKind::kCoe, macro, {});
  check_pico_radius(macro_radius, pico_radius);

  const double ring = macro_radius - pico_radius;
  if (pico_radius > ring) {
    throw Error(ErrorCode::kRingOverflow, "pico discs wider than the ring radius");
  }
  const double step = 2.0 * std::asin(pico_radius / ring);
  if (n_picos * step > 2.0 * std::numbers::pi * (1.0 + 1e-12)) {
    throw Error(ErrorCode::kRingOverflow,
                std::to_string(n_picos) + " tangential picos need " + std::to_string(n_picos * step) +
                    " rad of ring");
  }

  std::vector<Cell> picos;
  picos.reserve(static_cast<std::size_t>(n_picos));
  for (int i = 0; i < n_picos; ++i) {
    const double angle = i * step;
    picos.push_back(Cell{i,
                         {macro.center.x + ring * std::cos(angle), macro.center.y + ring * std::sin(angle)},
                         pico_radius,
                         CellKind::kPico});
  }
  return Topology(LayoutKind::kCoe, macro, std::move(picos));
}

Topology build_udc(double macro_radius, double pico_radius, int n_picos, Rng& rng, int max_attempts) {
  const Cell macro = make_macro(macro_radius);
  if (n_picos < 0) throw Error(ErrorCode::kValidationError, "n_picos must be non-negative");
  if (n_picos == 0) return Topology(LayoutKind::kUdc, macro, {});
  check_pico_radius(macro_radius, pico_radius);

  const double placement_radius = macro_radius - pico_radius;
  const double min_separation = 2.0 * pico_radius;
  std::vector<Cell> picos;
  picos.reserve(static_cast<std::size_t>(n_picos));
  for (int i = 0; i < n_picos; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < max_attempts && !placed; ++attempt) {
      const Point2D candidate = sample_in_disc(macro.center, placement_radius, rng);
      bool clear = true;
      for (const Cell& other : picos) {
        if (distance(candidate, other.center) < min_separation) {
          clear = false;
          break;
        }
      }
      if (clear) {
        picos.push_back(Cell{i, candidate, pico_radius, CellKind::kPico});
        placed = true;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::kPlacementFailure,
                  "pico " + std::to_string(i) + " not placed after " + std::to_string(max_attempts) + " attempts");
    }
  }
  return Topology(LayoutKind::kUdc, macro, std::move(picos));
}

std::optional<int> containing_pico(const Topology& topology, Point2D p) {
  for (const Cell& pico : topology.picos()) {
    if (distance(p, pico.center) < pico.radius) return pico.id;
  }
  return std::nullopt;
}

bool satisfies_invariants(const Topology& topology, double tolerance) {
  const Cell& macro = topology.macro();
  const auto picos = topology.picos();
  if (topology.kind() == LayoutKind::kMoNet && !picos.empty()) return false;
  for (std::size_t i = 0; i < picos.size(); ++i) {
    if (picos[i].id != static_cast<int>(i)) return false;
    if (distance(picos[i].center, macro.center) + picos[i].radius > macro.radius + tolerance) return false;
    for (std::size_t j = i + 1; j < picos.size(); ++j) {
      if (distance(picos[i].center, picos[j].center) < picos[i].radius + picos[j].radius - tolerance) return false;
    }
  }
  return true;
}

std::string topology_to_json(const Topology& topology) {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(topology.kind());
  const Cell& macro = topology.macro();
  doc["macro"] = {{"x", macro.center.x}, {"y", macro.center.y}, {"r", macro.radius}};
  doc["picos"] = nlohmann::ordered_json::array();
  for (const Cell& pico : topology.picos()) {
    doc["picos"].push_back({{"id", pico.id}, {"x", pico.center.x}, {"y", pico.center.y}, {"r", pico.radius}});
  }
  return doc.dump(2);
}

}  // namespace hetsim
