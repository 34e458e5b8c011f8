#include "polyorder/registry.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polyorder {

double xsininv(double x) noexcept { return x == 0.0 ? 0.0 : x * std::sin(1.0 / x); }

namespace {

FieldBundle one_dim(std::string name, double (*fn)(double), Domain domain) {
  ScalarField f{[fn](const Point& p) { return fn(p[0]); }, domain, name};
  VectorField c{[fn](const Point& p) { return Point{fn(p[0])}; }, domain, name};
  return FieldBundle{std::move(name), std::move(f), std::move(c)};
}

void require_dim(const Domain& d, std::size_t dim, const std::string& name) {
  if (d.dim() != dim) {
    throw std::invalid_argument("field '" + name + "' needs a " + std::to_string(dim) +
                                "-D domain, got " + d.describe());
  }
}

}  // namespace

const std::vector<std::string>& builtin_field_names() {
  static const std::vector<std::string> names{"quadratic", "cubic", "xsininv", "mexican_hat", "linear"};
  return names;
}

FieldBundle make_builtin(const std::string& name, std::optional<Domain> domain) {
  if (name == "quadratic" || name == "cubic" || name == "linear" || name == "xsininv") {
    Domain d = domain.value_or(name == "xsininv" ? Domain::cube(-1.0, 2.0, 1) : Domain::cube(-1.0, 1.0, 1));
    require_dim(d, 1, name);
    if (name == "quadratic") return one_dim(name, [](double x) { return x * x; }, d);
    if (name == "cubic") return one_dim(name, [](double x) { return x * x * x; }, d);
    if (name == "linear") return one_dim(name, [](double x) { return x; }, d);
    return one_dim(name, &xsininv, d);
  }
  if (name == "mexican_hat") {
    Domain d = domain.value_or(Domain::cube(-2.0, 2.0, 2));
    require_dim(d, 2, name);
    ScalarField f{[](const Point& p) {
                    const double r = std::hypot(p[0], p[1]);
                    return (r - 1.0) * (r - 1.0);
                  },
                  d, name};
    // grad (r-1)^2 = 2 (r-1) p / r; the origin (a kink) is assigned 0.
    VectorField c{[](const Point& p) {
                    const double r = std::hypot(p[0], p[1]);
                    if (r == 0.0) return Point{0.0, 0.0};
                    const double s = 2.0 * (r - 1.0) / r;
                    return Point{s * p[0], s * p[1]};
                  },
                  d, name};
    return FieldBundle{name, std::move(f), std::move(c)};
  }
  throw std::invalid_argument("unknown field '" + name + "'");
}

FieldBundle make_quadratic(std::vector<std::vector<double>> Q, std::vector<double> b,
                           std::optional<Domain> domain, std::string label) {
  const std::size_t n = b.size();
  if (n == 0 || Q.size() != n) throw std::invalid_argument("quadratic: Q must be n x n with n = len(b)");
  for (const auto& row : Q) {
    if (row.size() != n) throw std::invalid_argument("quadratic: Q must be square");
    for (double v : row) {
      if (!std::isfinite(v)) throw std::invalid_argument("quadratic: Q entries must be finite");
    }
  }
  for (double v : b) {
    if (!std::isfinite(v)) throw std::invalid_argument("quadratic: b entries must be finite");
  }
  Domain d = domain.value_or(Domain::cube(-1.0, 1.0, n));
  require_dim(d, n, label);

  std::vector<std::vector<double>> sym(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym[i][j] = 0.5 * (Q[i][j] + Q[j][i]);

  ScalarField f{[Q, b, n](const Point& x) {
                  double quad = 0.0;
                  double lin = 0.0;
                  for (std::size_t i = 0; i < n; ++i) {
                    double row = 0.0;
                    for (std::size_t j = 0; j < n; ++j) row += Q[i][j] * x[j];
                    quad += x[i] * row;
                    lin += b[i] * x[i];
                  }
                  return 0.5 * quad + lin;
                },
                d, label};
  VectorField c{[sym, b, n](const Point& x) {
                  std::vector<double> g(n);
                  for (std::size_t i = 0; i < n; ++i) {
                    double row = b[i];
                    for (std::size_t j = 0; j < n; ++j) row += sym[i][j] * x[j];
                    g[i] = row;
                  }
                  return Point(std::move(g));
                },
                d, label};
  return FieldBundle{std::move(label), std::move(f), std::move(c)};
}

FieldBundle quadratic_from_json(const std::string& json_text, std::optional<Domain> domain) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("quadratic descriptor: ") + e.what());
  }
  if (!j.contains("Q") || !j.contains("b")) {
    throw std::invalid_argument("quadratic descriptor needs keys \"Q\" and \"b\"");
  }
  auto Q = j.at("Q").get<std::vector<std::vector<double>>>();
  auto b = j.at("b").get<std::vector<double>>();
  if (!domain && j.contains("lower") && j.contains("upper")) {
    domain = Domain::box(Point(j.at("lower").get<std::vector<double>>()),
                         Point(j.at("upper").get<std::vector<double>>()));
  }
  return make_quadratic(std::move(Q), std::move(b), std::move(domain),
                        j.value("label", std::string("custom_quadratic")));
}

FieldBundle resolve_field(const std::string& ref, std::optional<Domain> domain) {
  constexpr std::string_view neg = "neg:";
  if (ref.starts_with(neg)) {
    FieldBundle inner = resolve_field(ref.substr(neg.size()), std::move(domain));
    return FieldBundle{"neg:" + inner.name, negate(inner.scalar), negate(inner.vector)};
  }
  for (const auto& name : builtin_field_names()) {
    if (ref == name) return make_builtin(name, std::move(domain));
  }
  std::ifstream in(ref);
  if (!in) throw std::invalid_argument("unknown field '" + ref + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  FieldBundle out = quadratic_from_json(buf.str(), std::move(domain));
  return out;
}

}  // namespace polyorder
