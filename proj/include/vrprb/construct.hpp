#pragma once

#include "vrprb/model.hpp"
#include "vrprb/rng.hpp"

namespace vrprb {

// TSP-space encoding of a solution: a permutation of the clients 1..N with
// no route delimiters.
using GiantTour = std::vector<int>;

// Concatenates the routes in order. split_giant_tour(to_giant_tour(s)) may
// re-draw the route boundaries; to_giant_tour(split_giant_tour(t)) == t.
GiantTour to_giant_tour(const Solution& solution);

// Greedy left-to-right fill: each client joins the current route while the
// load fits, otherwise a new route opens. `starts` receives the index in
// `tour` where each route begins.
void split_route_starts(const Instance& instance, const GiantTour& tour,
                        std::vector<int>& starts);

Solution split_giant_tour(const Instance& instance, const GiantTour& tour);

// Uniformly random client permutation, then split.
Solution random_initial_solution(const Instance& instance, Rng& rng);

}  // namespace vrprb
