#ifndef CSPOLY_TOOLS_DOCUMENT_HPP
#define CSPOLY_TOOLS_DOCUMENT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cspoly/genfunc.hpp"
#include "cspoly/operators.hpp"
#include "cspoly/polynomial.hpp"
#include "cspoly/sympoly.hpp"

namespace cspoly::cli {

struct ModelDescriptor {
  std::string name;
  std::size_t N = 0;
  std::string kappa;
  std::vector<std::string> alpha;  // (α₂, α₁, α₀)
  std::vector<std::string> beta;   // (β₁, β₀)
  std::map<std::string, std::string> params;

  friend bool operator==(const ModelDescriptor&, const ModelDescriptor&) = default;
};

ModelDescriptor describe(const ModelSpec& model);
ModelDescriptor describe_free(std::size_t N, const Rat& kappa);

struct Term {
  std::vector<int> exponent;
  std::string coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Everything the CLI prints. Terms are kept in grevlex order and every
/// rational is a canonical "p/q" string.
struct OutputDocument {
  std::string command;
  ModelDescriptor model;
  std::optional<std::vector<int>> index;
  std::optional<std::vector<int>> ntilde;
  std::optional<std::string> eigenvalue;
  std::string basis = "m";  // m, f, g, or x for raw monomials
  /// Size of the x block when exponents are split into (x, x̃).
  std::optional<std::size_t> x_block;
  std::vector<Term> terms;
  nlohmann::json verification;  // null when absent

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

std::vector<Term> terms_of(const SymPoly& p);
std::vector<Term> terms_of(const Polynomial& p);
std::vector<Term> terms_of(const FExpansion& e);
std::vector<Term> terms_of(const GExpansion& e);

nlohmann::json to_json(const OutputDocument& doc);
/// Throws InputError on a malformed document.
OutputDocument from_json(const nlohmann::json& j);

std::string emit_json(const OutputDocument& doc);
OutputDocument parse_document(const std::string& text);
std::string emit_csv(const OutputDocument& doc);
std::string emit_latex(const OutputDocument& doc);

}  // namespace cspoly::cli

#endif
