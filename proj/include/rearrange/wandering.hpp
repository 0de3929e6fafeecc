#pragma once

#include <optional>

#include "rearrange/canonical.hpp"
#include "rearrange/diagram.hpp"

namespace rearrange {

enum class WanderingKind { Wandering, WeaklyWandering };

// non-periodic data: the walk from e lands at e_star, and f is a sibling
// leaf below e kept clear of it
struct WanderingWalk {
  Address e;
  Address e_star;
  Address f;
  std::size_t n = 0;
};

// periodic data: the chosen leaf cycles back after orbit_length steps
struct WanderingOrbit {
  Address edge;
  unsigned long long orbit_length = 0;
  unsigned long long order = 0;
};

struct WanderingCertificate {
  WanderingKind kind = WanderingKind::WeaklyWandering;
  CellUnion set;
  std::optional<WanderingWalk> walk;
  std::optional<WanderingOrbit> orbit;
  unsigned long verified_to = 0;
};

WanderingCertificate wandering_cell(const Rearrangement& g);
bool verify_wandering(const Rearrangement& g, const WanderingCertificate& cert,
                      unsigned long max_power);
// least descendant cell whose closure avoids the gluing boundary of C(f)
Address cell_inside_interior(const SystemPtr& sys, const Address& f,
                             const std::vector<LassoPoint>& avoid = {});

}  // namespace rearrange
