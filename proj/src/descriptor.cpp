#include "tailorder/descriptor.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "tailorder/types.hpp"

namespace tailorder {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string join(const std::vector<std::string>& parts, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < parts.size(); ++i) {
    if (i > from) out += ':';
    out += parts[i];
  }
  return out;
}

double to_number(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DescriptorError("expected a number for " + what + ", got '" + s + "'");
  }
  if (used != s.size() || std::isnan(v)) throw DescriptorError("expected a number for " + what + ", got '" + s + "'");
  return v;
}

int to_dim(const std::string& s) {
  const double v = to_number(s, "dimension");
  if (v != std::floor(v) || v < 2 || v > 16) throw DescriptorError("dimension must be an integer in [2, 16]");
  return static_cast<int>(v);
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DescriptorError(std::string("missing field '") + key + "'");
  return j.at(key);
}

double number_field(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw DescriptorError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

int dim_field(const json& params, int fallback) {
  if (!params.is_object() || !params.contains("dim")) return fallback;
  const json& v = params.at("dim");
  if (!v.is_number_integer() || v.get<int>() < 2) throw DescriptorError("field 'dim' must be an integer >= 2");
  return v.get<int>();
}

std::string name_field(const json& j) {
  const json& v = require(j, "name");
  if (!v.is_string()) throw DescriptorError("field 'name' must be a string");
  return v.get<std::string>();
}

GeneratorSpec generator_from_json(const json& j) {
  const std::string name = name_field(j);
  if (name == "clayton") return {GeneratorSpec::Kind::clayton, number_field(j, "theta"), ""};
  if (name == "gumbel") return {GeneratorSpec::Kind::gumbel, number_field(j, "theta"), ""};
  if (name == "joe") return {GeneratorSpec::Kind::joe, number_field(j, "theta"), ""};
  if (name == "nonstrict_linear") return {GeneratorSpec::Kind::nonstrict_linear, 1.0, ""};
  throw DescriptorError("unknown generator '" + name + "'");
}

DiagonalSpec diagonal_from_json(const json& j) {
  const std::string name = name_field(j);
  if (name == "power") return {DiagonalSpec::Kind::power, number_field(j, "p"), ""};
  if (name == "clayton") return {DiagonalSpec::Kind::clayton, number_field(j, "theta"), ""};
  throw DescriptorError("unknown diagonal '" + name + "'");
}

TdfSpec tdf_from_json(const json& j) {
  const std::string name = name_field(j);
  const int dim = dim_field(j, 2);
  if (name == "zero") return {TdfSpec::Kind::zero, 0.0, dim, ""};
  if (name == "min") return {TdfSpec::Kind::min, 0.0, dim, ""};
  if (name == "clayton") return {TdfSpec::Kind::clayton, number_field(j, "alpha"), dim, ""};
  if (name == "fig1-parabola") return {TdfSpec::Kind::fig1_parabola, 0.0, 2, ""};
  if (name == "fig1-piecewise") return {TdfSpec::Kind::fig1_piecewise, 0.0, 2, ""};
  throw DescriptorError("unknown tail dependence function '" + name + "'");
}

DescriptorPtr child(const json& j, const char* key) {
  return std::make_shared<const Descriptor>(descriptor_from_json(require(j, key)));
}

}  // namespace

std::string Descriptor::family_name() const {
  return std::visit(overloaded{
                        [](const family::Independence&) { return std::string("independence"); },
                        [](const family::Comonotone&) { return std::string("comonotone"); },
                        [](const family::Countermonotone&) { return std::string("countermonotone"); },
                        [](const family::Archimedean&) { return std::string("archimedean"); },
                        [](const family::MarshallOlkin&) { return std::string("marshall_olkin"); },
                        [](const family::ExtremeValue&) { return std::string("extreme_value"); },
                        [](const family::LowerExtremeValue&) { return std::string("lower_extreme_value"); },
                        [](const family::FredricksNelsen&) { return std::string("fredricks_nelsen"); },
                        [](const family::Bertino&) { return std::string("bertino"); },
                        [](const family::Semilinear&) { return std::string("semilinear"); },
                        [](const family::Gaussian&) { return std::string("gaussian"); },
                        [](const family::Glue&) { return std::string("glue"); },
                        [](const family::Survival&) { return std::string("survival"); },
                        [](const family::Hierarchical&) { return std::string("hierarchical"); },
                        [](const family::Custom&) { return std::string("custom"); },
                    },
                    node);
}

json to_json(const GeneratorSpec& g) {
  switch (g.kind) {
    case GeneratorSpec::Kind::clayton:
      return {{"name", "clayton"}, {"theta", g.theta}};
    case GeneratorSpec::Kind::gumbel:
      return {{"name", "gumbel"}, {"theta", g.theta}};
    case GeneratorSpec::Kind::joe:
      return {{"name", "joe"}, {"theta", g.theta}};
    case GeneratorSpec::Kind::nonstrict_linear:
      return {{"name", "nonstrict_linear"}};
    case GeneratorSpec::Kind::custom:
      break;
  }
  return {{"name", "custom"}, {"label", g.label}};
}

json to_json(const DiagonalSpec& d) {
  switch (d.kind) {
    case DiagonalSpec::Kind::power:
      return {{"name", "power"}, {"p", d.param}};
    case DiagonalSpec::Kind::clayton:
      return {{"name", "clayton"}, {"theta", d.param}};
    case DiagonalSpec::Kind::custom:
      break;
  }
  return {{"name", "custom"}, {"label", d.label}};
}

json to_json(const TdfSpec& t) {
  switch (t.kind) {
    case TdfSpec::Kind::zero:
      return {{"name", "zero"}, {"dim", t.dim}};
    case TdfSpec::Kind::min:
      return {{"name", "min"}, {"dim", t.dim}};
    case TdfSpec::Kind::clayton:
      return {{"name", "clayton"}, {"alpha", t.alpha}, {"dim", t.dim}};
    case TdfSpec::Kind::fig1_parabola:
      return {{"name", "fig1-parabola"}};
    case TdfSpec::Kind::fig1_piecewise:
      return {{"name", "fig1-piecewise"}};
    case TdfSpec::Kind::custom:
      break;
  }
  return {{"name", "custom"}, {"label", t.label}, {"dim", t.dim}};
}

json to_json(const Descriptor& d) {
  json j;
  j["family"] = d.family_name();
  json params = json::object();
  std::visit(overloaded{
                 [&](const family::Independence& n) { params["dim"] = n.dim; },
                 [&](const family::Comonotone& n) { params["dim"] = n.dim; },
                 [&](const family::Countermonotone&) {},
                 [&](const family::Archimedean& n) {
                   params["generator"] = to_json(n.generator);
                   params["dim"] = n.dim;
                 },
                 [&](const family::MarshallOlkin& n) { params["alpha"] = n.alpha; },
                 [&](const family::ExtremeValue& n) { params["tdf"] = to_json(n.tdf); },
                 [&](const family::LowerExtremeValue& n) { params["tdf"] = to_json(n.tdf); },
                 [&](const family::FredricksNelsen& n) { params["diagonal"] = to_json(n.diagonal); },
                 [&](const family::Bertino& n) { params["diagonal"] = to_json(n.diagonal); },
                 [&](const family::Semilinear& n) { params["diagonal"] = to_json(n.diagonal); },
                 [&](const family::Gaussian& n) { params["rho"] = n.rho; },
                 [&](const family::Glue& n) {
                   params["axis"] = n.axis;
                   params["split"] = n.split;
                   j["left"] = to_json(*n.left);
                   j["right"] = to_json(*n.right);
                 },
                 [&](const family::Survival& n) { j["inner"] = to_json(*n.inner); },
                 [&](const family::Hierarchical& n) {
                   j["outer"] = to_json(*n.outer);
                   j["inner"] = to_json(*n.inner);
                 },
                 [&](const family::Custom& n) {
                   params["label"] = n.label;
                   params["dim"] = n.dim;
                 },
             },
             d.node);
  j["params"] = params;
  return j;
}

Descriptor descriptor_from_json(const json& j) {
  if (!j.is_object()) throw DescriptorError("descriptor must be a JSON object");
  const json& tag = require(j, "family");
  if (!tag.is_string()) throw DescriptorError("field 'family' must be a string");
  const std::string f = tag.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw DescriptorError("field 'params' must be an object");

  if (f == "independence") return {family::Independence{dim_field(params, 2)}};
  if (f == "comonotone") return {family::Comonotone{dim_field(params, 2)}};
  if (f == "countermonotone") {
    if (dim_field(params, 2) != 2) throw DescriptorError("countermonotone is only defined for d = 2");
    return {family::Countermonotone{}};
  }
  if (f == "archimedean") {
    return {family::Archimedean{generator_from_json(require(params, "generator")), dim_field(params, 2)}};
  }
  if (f == "marshall_olkin") return {family::MarshallOlkin{number_field(params, "alpha")}};
  if (f == "extreme_value") return {family::ExtremeValue{tdf_from_json(require(params, "tdf"))}};
  if (f == "lower_extreme_value") return {family::LowerExtremeValue{tdf_from_json(require(params, "tdf"))}};
  if (f == "fredricks_nelsen") return {family::FredricksNelsen{diagonal_from_json(require(params, "diagonal"))}};
  if (f == "bertino") return {family::Bertino{diagonal_from_json(require(params, "diagonal"))}};
  if (f == "semilinear") return {family::Semilinear{diagonal_from_json(require(params, "diagonal"))}};
  if (f == "gaussian") {
    if (dim_field(params, 2) != 2) throw DescriptorError("gaussian is only supported for d = 2");
    return {family::Gaussian{number_field(params, "rho")}};
  }
  if (f == "glue") {
    const json& axis = require(params, "axis");
    if (!axis.is_number_integer() || (axis.get<int>() != 1 && axis.get<int>() != 2)) {
      throw DescriptorError("glue axis must be 1 or 2");
    }
    return {family::Glue{axis.get<int>(), number_field(params, "split"), child(j, "left"), child(j, "right")}};
  }
  if (f == "survival") return {family::Survival{child(j, "inner")}};
  if (f == "hierarchical") {
    if (j.contains("children")) {
      const json& c = j.at("children");
      if (!c.is_array() || c.size() != 1) throw DescriptorError("hierarchical 'children' must hold one inner node");
      return {family::Hierarchical{child(j, "outer"), std::make_shared<const Descriptor>(descriptor_from_json(c[0]))}};
    }
    return {family::Hierarchical{child(j, "outer"), child(j, "inner")}};
  }
  if (f == "custom") throw DescriptorError("custom copulas cannot be read from a descriptor");
  throw DescriptorError("unknown family '" + f + "'");
}

GeneratorSpec parse_generator_spec(const std::string& text) {
  const auto p = split(text, ':');
  if (p.empty()) throw DescriptorError("empty generator");
  if (p[0] == "nonstrict-linear" || p[0] == "nonstrict_linear") {
    if (p.size() != 1) throw DescriptorError("the linear generator takes no parameter");
    return {GeneratorSpec::Kind::nonstrict_linear, 1.0, ""};
  }
  if (p.size() != 2) throw DescriptorError("generator shorthand is name:theta");
  const double theta = to_number(p[1], "theta");
  if (p[0] == "clayton") return {GeneratorSpec::Kind::clayton, theta, ""};
  if (p[0] == "gumbel") return {GeneratorSpec::Kind::gumbel, theta, ""};
  if (p[0] == "joe") return {GeneratorSpec::Kind::joe, theta, ""};
  throw DescriptorError("unknown generator '" + p[0] + "'");
}

DiagonalSpec parse_diagonal_spec(const std::string& text) {
  const auto p = split(text, ':');
  if (p.size() != 2) throw DescriptorError("diagonal shorthand is power:p or clayton:theta");
  if (p[0] == "power") return {DiagonalSpec::Kind::power, to_number(p[1], "p"), ""};
  if (p[0] == "clayton") return {DiagonalSpec::Kind::clayton, to_number(p[1], "theta"), ""};
  throw DescriptorError("unknown diagonal '" + p[0] + "'");
}

TdfSpec parse_tdf_spec(const std::string& text) {
  const auto p = split(text, ':');
  if (p.empty()) throw DescriptorError("empty tail dependence function");
  const std::string& n = p[0];
  if (n == "zero" || n == "min") {
    if (p.size() > 2) throw DescriptorError("shorthand is " + n + "[:d]");
    const int dim = p.size() == 2 ? to_dim(p[1]) : 2;
    return {n == "zero" ? TdfSpec::Kind::zero : TdfSpec::Kind::min, 0.0, dim, ""};
  }
  if (n == "clayton") {
    if (p.size() < 2 || p.size() > 3) throw DescriptorError("shorthand is clayton:alpha[:d]");
    return {TdfSpec::Kind::clayton, to_number(p[1], "alpha"), p.size() == 3 ? to_dim(p[2]) : 2, ""};
  }
  if (p.size() == 1 && n == "fig1-parabola") return {TdfSpec::Kind::fig1_parabola, 0.0, 2, ""};
  if (p.size() == 1 && n == "fig1-piecewise") return {TdfSpec::Kind::fig1_piecewise, 0.0, 2, ""};
  throw DescriptorError("unknown tail dependence function '" + text + "'");
}

Descriptor parse_shorthand(const std::string& text) {
  const auto p = split(text, ':');
  if (p.empty() || p[0].empty()) throw DescriptorError("empty descriptor");
  const std::string& n = p[0];
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi) throw DescriptorError("wrong number of parameters in '" + text + "'");
  };

  if (n == "independence" || n == "comonotone") {
    arity(1, 2);
    const int dim = p.size() == 2 ? to_dim(p[1]) : 2;
    if (n == "independence") return {family::Independence{dim}};
    return {family::Comonotone{dim}};
  }
  if (n == "countermonotone") {
    arity(1, 1);
    return {family::Countermonotone{}};
  }
  if (n == "nonstrict-linear" || n == "nonstrict_linear") {
    arity(1, 1);
    return {family::Archimedean{{GeneratorSpec::Kind::nonstrict_linear, 1.0, ""}, 2}};
  }
  if (n == "clayton" || n == "gumbel" || n == "joe") {
    arity(2, 3);
    return {family::Archimedean{parse_generator_spec(n + ":" + p[1]), p.size() == 3 ? to_dim(p[2]) : 2}};
  }
  if (n == "marshall-olkin" || n == "mo") {
    arity(2, 2);
    return {family::MarshallOlkin{to_number(p[1], "alpha")}};
  }
  if (n == "gaussian") {
    arity(2, 2);
    return {family::Gaussian{to_number(p[1], "rho")}};
  }
  if (n == "ev" || n == "lev") {
    arity(2, 4);
    const TdfSpec tdf = parse_tdf_spec(join(p, 1));
    if (n == "ev") return {family::ExtremeValue{tdf}};
    return {family::LowerExtremeValue{tdf}};
  }
  if (n == "fn" || n == "bertino" || n == "semilinear") {
    arity(3, 3);
    const DiagonalSpec diag = parse_diagonal_spec(join(p, 1));
    if (n == "fn") return {family::FredricksNelsen{diag}};
    if (n == "bertino") return {family::Bertino{diag}};
    return {family::Semilinear{diag}};
  }
  throw DescriptorError("unknown shorthand '" + text + "'");
}

Descriptor parse_descriptor(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw DescriptorError("empty descriptor");
  if (text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DescriptorError(std::string("malformed JSON: ") + e.what());
    }
    return descriptor_from_json(j);
  }
  if (text.find(':') == std::string::npos || text.ends_with(".json")) {
    std::ifstream in(text);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      const std::string content = buf.str();
      if (content.find_first_not_of(" \t\r\n") != std::string::npos) return parse_descriptor(content);
      throw DescriptorError("descriptor file '" + text + "' is empty");
    }
  }
  return parse_shorthand(text);
}

}  // namespace tailorder
