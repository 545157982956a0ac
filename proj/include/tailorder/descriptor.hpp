#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tailorder {

// Named built-ins that can travel through the file interface. Arbitrary user
// functions are representable in memory (see Generator / DiagonalSection /
// TailDepFunction) but serialize as "custom" and cannot be read back.

struct GeneratorSpec {
  enum class Kind { clayton, gumbel, joe, nonstrict_linear, custom };
  Kind kind = Kind::custom;
  double theta = 1.0;
  std::string label;  // only for custom

  bool operator==(const GeneratorSpec&) const = default;
};

struct DiagonalSpec {
  enum class Kind { power, clayton, custom };
  Kind kind = Kind::custom;
  double param = 1.0;  // exponent p for power, theta for clayton
  std::string label;

  bool operator==(const DiagonalSpec&) const = default;
};

struct TdfSpec {
  enum class Kind { zero, min, clayton, fig1_parabola, fig1_piecewise, custom };
  Kind kind = Kind::custom;
  double alpha = 1.0;  // clayton only
  int dim = 2;
  std::string label;

  bool operator==(const TdfSpec&) const = default;
};

struct Descriptor;
using DescriptorPtr = std::shared_ptr<const Descriptor>;

namespace family {
struct Independence { int dim = 2; };
struct Comonotone { int dim = 2; };
struct Countermonotone {};
struct Archimedean { GeneratorSpec generator; int dim = 2; };
struct MarshallOlkin { double alpha = 0.5; };
struct ExtremeValue { TdfSpec tdf; };
struct LowerExtremeValue { TdfSpec tdf; };
struct FredricksNelsen { DiagonalSpec diagonal; };
struct Bertino { DiagonalSpec diagonal; };
struct Semilinear { DiagonalSpec diagonal; };
struct Gaussian { double rho = 0.0; };
struct Glue { int axis = 1; double split = 0.5; DescriptorPtr left; DescriptorPtr right; };
struct Survival { DescriptorPtr inner; };
// Leaf assignment is fixed: u1 enters the outer node, (u2, u3) the inner one.
struct Hierarchical { DescriptorPtr outer; DescriptorPtr inner; };
struct Custom { std::string label; int dim = 2; };
}  // namespace family

struct Descriptor {
  using Variant = std::variant<family::Independence, family::Comonotone, family::Countermonotone,
                               family::Archimedean, family::MarshallOlkin, family::ExtremeValue,
                               family::LowerExtremeValue, family::FredricksNelsen, family::Bertino,
                               family::Semilinear, family::Gaussian, family::Glue, family::Survival,
                               family::Hierarchical, family::Custom>;
  Variant node;

  /// The "family" tag used in JSON.
  std::string family_name() const;
};

template <class T>
DescriptorPtr make_descriptor(T node) {
  return std::make_shared<const Descriptor>(Descriptor{std::move(node)});
}

nlohmann::json to_json(const Descriptor& d);
nlohmann::json to_json(const GeneratorSpec& g);
nlohmann::json to_json(const DiagonalSpec& d);
nlohmann::json to_json(const TdfSpec& t);

/// Throws DescriptorError on anything that does not match the schema.
Descriptor descriptor_from_json(const nlohmann::json& j);

/// Shorthand grammar, e.g. "clayton:2", "marshall-olkin:0.5", "lev:clayton:2",
/// "fn:power:2", "gaussian:0.5", "independence:3".
Descriptor parse_shorthand(const std::string& text);

/// JSON text (starting with '{') or shorthand.
Descriptor parse_descriptor(const std::string& text);

GeneratorSpec parse_generator_spec(const std::string& text);
DiagonalSpec parse_diagonal_spec(const std::string& text);
TdfSpec parse_tdf_spec(const std::string& text);

}  // namespace tailorder
