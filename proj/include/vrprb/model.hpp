#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vrprb {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// A capacitated routing instance: depot + clients with Euclidean travel
/// costs, one scalar vehicle capacity (homogeneous fleet). Index 0 is the
/// depot; clients are 1..N. Immutable after construction by convention.
struct Instance {
  std::string id;
  std::vector<Point> coords;    // size N+1, coords[0] is the depot
  std::vector<double> demands;  // size N+1, demands[0] == 0
  double capacity = 0.0;
  int fleet_hint = 0;  // metadata only; the route count is emergent

  int num_clients() const { return static_cast<int>(coords.size()) - 1; }
};

// A route visits clients in order; the depot is implicit at both ends.
using Route = std::vector<int>;

// An ordered partition of the clients into capacity-feasible routes.
struct Solution {
  std::vector<Route> routes;
};

// Both throw std::invalid_argument describing the first violated invariant.
void validate_instance(const Instance& instance);
void validate_solution(const Instance& instance, const Solution& solution);

double distance(const Instance& instance, int o, int s);
double route_length(const Instance& instance, const Route& route);
double route_load(const Instance& instance, const Route& route);
double total_distance(const Instance& instance, const Solution& solution);
std::vector<double> route_lengths(const Instance& instance, const Solution& solution);

// Instance text format, one file per instance:
//   line 1:       N T Q
//   lines 2..N+2: index x y demand   (index 0 first, the depot)
Instance load_instance(const std::filesystem::path& file);
void save_instance(const Instance& instance, const std::filesystem::path& file);

// Shortest decimal form that round-trips to the same double.
std::string double_repr(double value);

}  // namespace vrprb
