#pragma once

#include <string>
#include <vector>

#include "polyorder/classify.hpp"
#include "polyorder/field.hpp"

namespace polyorder {

using Matrix = std::vector<std::vector<double>>;

struct Population {
  double mass = 1.0;
  std::size_t strategies = 0;
};

/// A population game (X, c): X is a product of simplexes and c maps a state
/// to the cost of every pure strategy of every population. Rows of the cost
/// matrices index the population's own pure strategies.
struct PopulationGame {
  std::vector<Population> populations;
  VectorField cost;
  std::string label;

  const Domain& domain() const noexcept { return cost.domain; }
};

/// Single population with c(x) = C x on Simplex(mass, m).
PopulationGame from_symmetric_matrix(const Matrix& C, double mass = 1.0, std::string label = "symmetric");

/// Two unit-mass populations: pop-1 costs A y, pop-2 costs B' x, state (x, y).
PopulationGame from_bimatrix(const Matrix& A, const Matrix& B, std::string label = "bimatrix");

/// {"mode":"symmetric","C":[[...]],"mass":1.0} or {"mode":"bimatrix","A":[[...]],"B":[[...]]}.
PopulationGame game_from_json(const std::string& json_text, std::string label = "game");
PopulationGame load_game(const std::string& path);

/// Nash equilibrium = critical element of the cost field.
CheckResult is_nash(const PopulationGame& g, const Point& p, const SampleSet& challengers,
                    const ToleranceConfig& cfg);

/// Pure-strategy states plus seeded interior states.
SampleSet default_game_challengers(const PopulationGame& g, std::uint64_t seed, std::size_t count = 4096);

/// Hawk-Dove in cost form: C = [[1,-2],[0,-1]], interior equilibrium (1/2, 1/2).
PopulationGame hawk_dove();

}  // namespace polyorder
