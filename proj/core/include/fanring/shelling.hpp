#pragma once

// Orders on the maximal cones of a complete fan.  An order sigma_1 ..
// sigma_m assigns to each position the interval face tau_i, the
// intersection of sigma_i with all wall neighbours that come later.
// Two conditions make such an order usable downstream:
//
//   (*)   tau_i  < sigma_j  implies  i <= j
//   (*')  tau'_i < sigma_j  implies  j <= i
//
// where tau'_i is spanned by the rays of sigma_i outside tau_i.  The
// second condition equals the first for the reversed order.

#include <map>
#include <optional>
#include <vector>

#include "fanring/fan.hpp"

namespace fanring {

struct ShellingData {
  std::vector<int> order;        // positions into fan.max_cones, 0-based
  std::vector<ConeRef> sigma;    // max cones in order
  std::vector<ConeRef> tau;      // interval bottoms
  std::vector<ConeRef> tau_prime;
  bool star_ok = false;
  bool star_prime_ok = false;
  // Dual basis of the rays of sigma_m, in ascending ray-index order.
  std::vector<DualVector> sigma_m_dual;

  int size() const { return static_cast<int>(order.size()); }
};

// Computes the interval data for a given order.  The fan must validate
// cleanly (unsupported_fan_error otherwise); the order must be a
// permutation of the maximal cones (input_error otherwise).
ShellingData make_shelling_data(const Fan& fan, const std::vector<int>& order);

// Position i with tau_i <= face <= sigma_i.  For an order with (*) the
// intervals partition the faces, so i exists and is unique; without a
// match this throws input_error.
int locate_interval(const ShellingData& data, const ConeRef& face);

// locate_interval for every face of the fan at once.
std::map<ConeRef, int> interval_map(const Fan& fan, const ShellingData& data);

enum class SearchStatus { found, not_found, inconclusive };

struct SearchOptions {
  bool require_star_prime = true;
  unsigned seed = 0;
  int heuristic_attempts = 64;
  long node_limit = 1000000;
};

struct SearchResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<ShellingData> data;
  long nodes = 0;  // placements tried in the exhaustive phase
  int heuristic_attempts = 0;
};

// Looks for an order satisfying (*), and (*') as well unless the
// options drop that requirement.  Random sweep orders first, then an
// exhaustive search; the node limit turns exhaustion into an
// inconclusive result instead of an unbounded run.
SearchResult find_shelling(const Fan& fan, const SearchOptions& opts = {});

struct OrderCensus {
  long total = 0;
  long star_ok = 0;
  long both_ok = 0;
};

// Checks every order of the maximal cones; refuses fans with more than
// eight maximal cones.
OrderCensus enumerate_orders(const Fan& fan);

}  // namespace fanring
