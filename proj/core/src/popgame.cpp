#include "polyorder/popgame.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polyorder {

namespace {

void require_finite(const Matrix& M, const char* name) {
  if (M.empty() || M.front().empty()) throw std::invalid_argument(std::string(name) + ": empty matrix");
  const std::size_t cols = M.front().size();
  for (const auto& row : M) {
    if (row.size() != cols) throw std::invalid_argument(std::string(name) + ": ragged matrix");
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + ": entries must be finite");
    }
  }
}

Matrix parse_matrix(const nlohmann::json& j, const char* name) {
  if (!j.is_array()) throw std::invalid_argument(std::string("game: '") + name + "' must be a matrix");
  Matrix M;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument(std::string("game: '") + name + "' must be a matrix");
    std::vector<double> r;
    for (const auto& v : row) r.push_back(v.get<double>());
    M.push_back(std::move(r));
  }
  return M;
}

}  // namespace

PopulationGame from_symmetric_matrix(const Matrix& C, double mass, std::string label) {
  require_finite(C, "from_symmetric_matrix");
  const std::size_t m = C.size();
  if (C.front().size() != m) throw std::invalid_argument("from_symmetric_matrix: C must be square");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("from_symmetric_matrix: mass must be positive");
  Domain d = Domain::product({Simplex{mass, m}});
  VectorField c{[C, d](const Point& x) {
                  d.require_contains(x, "population game cost");
                  std::vector<double> out(C.size(), 0.0);
                  for (std::size_t i = 0; i < C.size(); ++i) {
                    for (std::size_t j = 0; j < C.size(); ++j) out[i] += C[i][j] * x[j];
                  }
                  return Point(std::move(out));
                },
                d, label};
  return PopulationGame{{Population{mass, m}}, std::move(c), std::move(label)};
}

PopulationGame from_bimatrix(const Matrix& A, const Matrix& B, std::string label) {
  require_finite(A, "from_bimatrix");
  require_finite(B, "from_bimatrix");
  const std::size_t m1 = A.size();
  const std::size_t m2 = A.front().size();
  if (B.size() != m1 || B.front().size() != m2) throw std::invalid_argument("from_bimatrix: A and B must have the same shape");
  Domain d = Domain::product({Simplex{1.0, m1}, Simplex{1.0, m2}});
  VectorField c{[A, B, d, m1, m2](const Point& s) {
                  d.require_contains(s, "population game cost");
                  std::vector<double> out(m1 + m2, 0.0);
                  for (std::size_t i = 0; i < m1; ++i) {
                    for (std::size_t j = 0; j < m2; ++j) {
                      out[i] += A[i][j] * s[m1 + j];
                      out[m1 + j] += B[i][j] * s[i];
                    }
                  }
                  return Point(std::move(out));
                },
                d, label};
  return PopulationGame{{Population{1.0, m1}, Population{1.0, m2}}, std::move(c), std::move(label)};
}

PopulationGame game_from_json(const std::string& json_text, std::string label) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("game: malformed JSON: ") + e.what());
  }
  try {
    if (j.contains("label")) label = j.at("label").get<std::string>();
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "symmetric") {
      const double mass = j.value("mass", 1.0);
      return from_symmetric_matrix(parse_matrix(j.at("C"), "C"), mass, label);
    }
    if (mode == "bimatrix") return from_bimatrix(parse_matrix(j.at("A"), "A"), parse_matrix(j.at("B"), "B"), label);
    throw std::invalid_argument("game: unknown mode '" + mode + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("game: ") + e.what());
  }
}

PopulationGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("game: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return game_from_json(ss.str(), path);
}

CheckResult is_nash(const PopulationGame& g, const Point& p, const SampleSet& challengers,
                    const ToleranceConfig& cfg) {
  return is_critical_element(g.cost, p, challengers, cfg);
}

SampleSet default_game_challengers(const PopulationGame& g, std::uint64_t seed, std::size_t count) {
  return sample_domain(g.domain(), SeededRandomStrategy{seed, count}, seed);
}

PopulationGame hawk_dove() { return from_symmetric_matrix({{1.0, -2.0}, {0.0, -1.0}}, 1.0, "hawk_dove"); }

}  // namespace polyorder
