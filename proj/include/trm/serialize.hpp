#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "trm/complex.hpp"
#include "trm/reduction.hpp"

namespace trm {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json field_to_json(const Field& f);
Field field_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const Field& f, const nlohmann::json& j);

nlohmann::json algebra_to_json(const GradedAlgebra& a);
AlgebraPtr algebra_from_json(const nlohmann::json& j);

/// Where a complex's algebra comes from: a stage of a graph reduction
/// (0 = R_Gamma, 1 = R_Gamma/(l1), 2 = R_Gamma/(l1, l2)).
struct AlgebraReference {
  GraphReduction reduction;
  int stage = 2;

  const AlgebraPtr& algebra() const;
  nlohmann::json to_json() const;
  static AlgebraReference from_json(const nlohmann::json& j);
  /// Same forms, rebuilt with another degree bound.
  AlgebraReference with_degree_bound(int degree_bound) const;
};

struct ComplexFile {
  std::optional<AlgebraReference> reference;
  FreeComplexWindow window;
};

nlohmann::json complex_to_json(const FreeComplexWindow& w, const std::optional<AlgebraReference>& ref);
ComplexFile complex_from_json(const nlohmann::json& j);

/// Re-expresses a window over another algebra with the same low-degree
/// bases (used when a reduction is rebuilt at a larger degree bound).
FreeComplexWindow rebase_window(const FreeComplexWindow& w, const AlgebraPtr& target);

std::string dump(const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace trm
