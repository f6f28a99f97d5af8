#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nomaps/bkp.hpp"

namespace nomaps {

enum class Identity {
  shifted_bkp1,
  ode_maps,
  ode_bipartite,
  ode_triangulations,
  ode_ledoux,
  ode_bip_oneface,
  fixed_charge,
};

const char* identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
const std::vector<Identity>& all_identities();
Model identity_model(Identity id);
/// Smallest order exercised by the test suite for each identity.
int default_order(Identity id);

/// Size n_max of the base series holding every coefficient up to t^order
/// (t^(2n) for maps, t^n for bipartite, t^(6n) for triangulations).
int base_size(Identity id, int order);

/// The tables an identity reads. Only the ones it needs are filled.
struct VerifyInputs {
  MapsTable maps;
  BipTable bip;
  TriTable tri{1};
  OneFaceTable ledoux;
  BipOneFaceTable bip_oneface;
};

VerifyInputs build_inputs(Identity id, int order);

/// Residual with the base series truncated at t^order. Throws
/// std::invalid_argument when the order leaves nothing to check.
TSeries residual(Identity id, int order, const VerifyInputs& inputs, Exec exec = Exec::parallel);

struct VerifyReport {
  std::string identity;
  std::string model;
  int order = 0;
  int min_order = 0;  // usable window of the residual
  int max_order = 0;
  bool pass = false;
  std::optional<TSeries::Location> failure;
};

VerifyReport make_report(Identity id, int order, const TSeries& residual);
VerifyReport verify(Identity id, int order, Exec exec = Exec::parallel);
VerifyReport verify_with(Identity id, int order, const VerifyInputs& inputs, Exec exec = Exec::parallel);

}  // namespace nomaps
