#include "nomaps/verify.hpp"

#include <stdexcept>

namespace nomaps {

namespace {

struct IdentityInfo {
  Identity id;
  const char* name;
  Model model;
  int order;
};

const IdentityInfo kInfo[] = {
    {Identity::shifted_bkp1, "shifted-bkp1", Model::maps, 20},
    {Identity::ode_maps, "ode-maps", Model::maps, 16},
    {Identity::ode_bipartite, "ode-bipartite", Model::bipartite, 12},
    {Identity::ode_triangulations, "ode-triangulations", Model::triangulations, 18},
    {Identity::ode_ledoux, "ode-ledoux", Model::maps, 14},
    {Identity::ode_bip_oneface, "ode-bip-oneface", Model::bipartite, 10},
    {Identity::fixed_charge, "fixed-charge", Model::maps, 12},
};

const IdentityInfo& info(Identity id) {
  for (const auto& i : kInfo) {
    if (i.id == id) return i;
  }
  throw std::logic_error("unknown identity");
}

}  // namespace

const char* identity_name(Identity id) { return info(id).name; }
Model identity_model(Identity id) { return info(id).model; }
int default_order(Identity id) { return info(id).order; }

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& i : kInfo) {
    if (name == i.name) return i.id;
  }
  return std::nullopt;
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> v;
    for (const auto& i : kInfo) v.push_back(i.id);
    return v;
  }();
  return ids;
}

int base_size(Identity id, int order) {
  switch (id) {
    case Identity::ode_bipartite:
    case Identity::ode_bip_oneface: return order;
    case Identity::ode_triangulations: return order / 6;
    default: return order / 2;
  }
}

VerifyInputs build_inputs(Identity id, int order) {
  const int n = base_size(id, order);
  if (n < 1) throw std::invalid_argument(std::string(identity_name(id)) + ": order " + std::to_string(order) + " is too small");
  VerifyInputs in;
  switch (id) {
    case Identity::shifted_bkp1:
    case Identity::ode_maps:
    case Identity::fixed_charge: in.maps = build_maps_table(MapsEngine::cc, n, n); break;
    case Identity::ode_bipartite: in.bip = build_bip_table(n, n); break;
    case Identity::ode_triangulations: in.tri = build_tri_table(n, n + 1); break;
    case Identity::ode_ledoux: in.ledoux = build_ledoux(n); break;
    case Identity::ode_bip_oneface: in.bip_oneface = build_bip_oneface(n); break;
  }
  return in;
}

TSeries residual(Identity id, int order, const VerifyInputs& in, Exec exec) {
  const int n = base_size(id, order);
  if (n < 1) throw std::invalid_argument(std::string(identity_name(id)) + ": order " + std::to_string(order) + " is too small");
  try {
    switch (id) {
      case Identity::shifted_bkp1: {
        SeriesContext ctx(Model::maps, maps_theta(in.maps, n).truncated(order), exec);
        return shifted_bkp1_residual(ctx);
      }
      case Identity::ode_maps: {
        SeriesContext ctx(Model::maps, maps_theta(in.maps, n).truncated(order), exec);
        return ode_residual(ctx);
      }
      case Identity::fixed_charge: {
        SeriesContext ctx(Model::maps, maps_theta(in.maps, n).truncated(order), exec);
        return fixed_charge_residual(ctx);
      }
      case Identity::ode_bipartite: {
        SeriesContext ctx(Model::bipartite, bip_eta(in.bip, n).truncated(order), exec);
        return ode_residual(ctx);
      }
      case Identity::ode_triangulations: {
        SeriesContext ctx(Model::triangulations, tri_xi(in.tri, n).truncated(order), exec);
        return ode_residual(ctx);
      }
      case Identity::ode_ledoux: return ledoux_ode_residual(ledoux_series(in.ledoux, n).truncated(order));
      case Identity::ode_bip_oneface: return bip_oneface_ode_residual(bip_oneface_series(in.bip_oneface, n).truncated(order));
    }
  } catch (const WindowError& e) {
    throw std::invalid_argument(std::string(identity_name(id)) + ": order " + std::to_string(order) +
                                " leaves no usable window (" + e.what() + ")");
  }
  throw std::logic_error("unknown identity");
}

VerifyReport make_report(Identity id, int order, const TSeries& r) {
  VerifyReport rep;
  rep.identity = identity_name(id);
  rep.model = model_name(identity_model(id));
  rep.order = order;
  rep.min_order = r.min_order();
  rep.max_order = r.max_order();
  rep.failure = r.first_nonzero();
  rep.pass = !rep.failure.has_value();
  return rep;
}

VerifyReport verify_with(Identity id, int order, const VerifyInputs& in, Exec exec) {
  return make_report(id, order, residual(id, order, in, exec));
}

VerifyReport verify(Identity id, int order, Exec exec) { return verify_with(id, order, build_inputs(id, order), exec); }

}  // namespace nomaps
