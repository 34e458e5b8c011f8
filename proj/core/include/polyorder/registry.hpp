#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyorder/field.hpp"

namespace polyorder {

/// A named field with both of its readings: as a scalar field f and as the
/// vector field c that the vector polyorder orders. For the 1-D entries the
/// vector reading is f itself; for mexican_hat and custom quadratics it is
/// the closed-form gradient.
struct FieldBundle {
  std::string name;
  ScalarField scalar;
  VectorField vector;
};

/// Names accepted by make_builtin: quadratic, cubic, xsininv, mexican_hat, linear.
const std::vector<std::string>& builtin_field_names();

/// Built-in field on its default domain (1-D entries: [-1, 1], xsininv:
/// [-1, 2], mexican_hat: [-2, 2]^2), or on `domain` when given.
FieldBundle make_builtin(const std::string& name, std::optional<Domain> domain = std::nullopt);

/// f(x) = 1/2 x'Qx + b'x with gradient 1/2 (Q + Q')x + b.
FieldBundle make_quadratic(std::vector<std::vector<double>> Q, std::vector<double> b,
                           std::optional<Domain> domain = std::nullopt,
                           std::string label = "custom_quadratic");

/// Parses {"Q": [[...]], "b": [...]} (optionally "lower"/"upper" arrays for the box).
FieldBundle quadratic_from_json(const std::string& json_text, std::optional<Domain> domain = std::nullopt);

/// Resolves a CLI field reference: a built-in name, a path to a JSON
/// quadratic descriptor, either optionally prefixed by "neg:" (negates both
/// readings). Throws std::invalid_argument for unknown references.
FieldBundle resolve_field(const std::string& ref, std::optional<Domain> domain = std::nullopt);

/// x*sin(1/x) with the continuous extension f(0) = 0.
double xsininv(double x) noexcept;

}  // namespace polyorder
