#include "toep/json_io.hpp"

#include <utility>
#include <vector>

#include "toep/error.hpp"

namespace toep {

namespace {

const Json& require_field(const Json& v, const char* key, const std::string& field) {
  auto it = v.find(key);
  if (it == v.end()) throw SchemaError(field + "." + key + ": required");
  return *it;
}

void require_object(const Json& v, const std::string& field) {
  if (!v.is_object()) throw SchemaError(field + ": expected a JSON object");
}

std::string sub(const std::string& field, const char* key) { return field + "." + key; }

}  // namespace

Json parse_json_text(const std::string& text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

long long_from_json(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) throw SchemaError(field + ": expected an integer");
  return static_cast<long>(v.get<long long>());
}

Rational rational_from_json(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError(field + ": " + e.what());
    }
  }
  throw SchemaError(field + ": expected a rational as integer or \"p/q\" string");
}

Series series_from_json(const Json& v, const std::string& field) {
  require_object(v, field);
  const Json& cj = require_field(v, "coeffs", field);
  if (!cj.is_array() || cj.empty())
    throw SchemaError(sub(field, "coeffs") + ": expected a nonempty array");
  std::vector<Rational> c;
  c.reserve(cj.size());
  for (std::size_t i = 0; i < cj.size(); ++i)
    c.push_back(rational_from_json(cj[i], sub(field, "coeffs") + "[" + std::to_string(i) + "]"));
  long lo = v.contains("lo") ? long_from_json(v["lo"], sub(field, "lo")) : 0;
  long ord = lo + static_cast<long>(c.size()) - 1;
  if (v.contains("order")) {
    ord = long_from_json(v["order"], sub(field, "order"));
    if (ord - lo + 1 != static_cast<long>(c.size()))
      throw SchemaError(field + ": coeffs length disagrees with the [lo, order] window");
  }
  return Series::from_coeffs(std::move(c), static_cast<int>(lo), static_cast<int>(ord));
}

Scalar scalar_from_json(const Json& v, const std::string& field) {
  if (v.is_object()) return Scalar(series_from_json(v, field));
  return Scalar(rational_from_json(v, field));
}

Partition partition_from_json(const Json& v, const std::string& field) {
  if (!v.is_array()) throw SchemaError(field + ": expected a JSON array of integers");
  std::vector<long> parts;
  parts.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    parts.push_back(long_from_json(v[i], field + "[" + std::to_string(i) + "]"));
  return make_partition(std::move(parts), field);
}

Specialization specialization_from_json(const Json& v, const std::string& field) {
  require_object(v, field);
  std::string kind = [&] {
    const Json& kj = require_field(v, "kind", field);
    if (!kj.is_string()) throw SchemaError(sub(field, "kind") + ": expected a string");
    return kj.get<std::string>();
  }();
  if (kind == "finite") {
    const Json& vals = require_field(v, "values", field);
    if (!vals.is_array()) throw SchemaError(sub(field, "values") + ": expected an array");
    std::vector<Scalar> xs;
    xs.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
      xs.push_back(scalar_from_json(vals[i], sub(field, "values") + "[" + std::to_string(i) + "]"));
    return Specialization::finite_list(std::move(xs));
  }
  Scalar q = scalar_from_json(require_field(v, "q", field), sub(field, "q"));
  if (kind == "principal")
    return Specialization::principal(q, long_from_json(require_field(v, "count", field),
                                                       sub(field, "count")));
  if (kind == "principal_shifted")
    return Specialization::principal_shifted(
        q, long_from_json(require_field(v, "start", field), sub(field, "start")),
        long_from_json(require_field(v, "count", field), sub(field, "count")));
  if (kind == "principal_infinite") {
    if (v.contains("shift"))
      return Specialization::principal_infinite_shifted(
          q, long_from_json(v["shift"], sub(field, "shift")));
    return Specialization::principal_infinite(q);
  }
  throw SchemaError(sub(field, "kind") +
                    ": one of finite, principal, principal_shifted, principal_infinite");
}

Symbol symbol_from_json(const Json& v, const std::string& field) {
  require_object(v, field);
  if (v.contains("builtin")) {
    const Json& bj = v["builtin"];
    if (!bj.is_string()) throw SchemaError(sub(field, "builtin") + ": expected a string");
    std::string name = bj.get<std::string>();
    if (name == "pure_fh")
      return Symbol::pure_fh(long_from_json(require_field(v, "gamma", field), sub(field, "gamma")),
                             long_from_json(require_field(v, "delta", field), sub(field, "delta")));
    if (name == "theta_gd")
      return Symbol::theta_gd(
          long_from_json(require_field(v, "gamma", field), sub(field, "gamma")),
          long_from_json(require_field(v, "delta", field), sub(field, "delta")),
          scalar_from_json(require_field(v, "q", field), sub(field, "q")));
    if (name == "theta_d")
      return Symbol::theta_d(long_from_json(require_field(v, "delta", field), sub(field, "delta")),
                             scalar_from_json(require_field(v, "q", field), sub(field, "q")));
    if (name == "tridiagonal")
      return Symbol::tridiagonal(
          rational_from_json(require_field(v, "x", field), sub(field, "x")),
          rational_from_json(require_field(v, "y", field), sub(field, "y")));
    throw SchemaError(sub(field, "builtin") +
                      ": one of pure_fh, theta_gd, theta_d, tridiagonal");
  }
  if (v.contains("factors")) {
    const Json& fj = v["factors"];
    if (!fj.is_array() || fj.empty())
      throw SchemaError(sub(field, "factors") + ": expected a nonempty array");
    std::vector<SymbolFactor> fs;
    fs.reserve(fj.size());
    for (std::size_t i = 0; i < fj.size(); ++i) {
      std::string ff = sub(field, "factors") + "[" + std::to_string(i) + "]";
      require_object(fj[i], ff);
      const Json& oj = require_field(fj[i], "orientation", ff);
      if (!oj.is_string() || (oj != "z" && oj != "zinv"))
        throw SchemaError(ff + ".orientation: expected \"z\" or \"zinv\"");
      const Json& kj = require_field(fj[i], "basis", ff);
      if (!kj.is_string() || (kj != "H" && kj != "E"))
        throw SchemaError(ff + ".basis: expected \"H\" or \"E\"");
      fs.push_back(SymbolFactor{oj == "zinv", kj == "H" ? SchurBasis::H : SchurBasis::E,
                                specialization_from_json(require_field(fj[i], "spec", ff),
                                                         ff + ".spec")});
    }
    return Symbol::factors(std::move(fs));
  }
  throw SchemaError(field + ": expected \"builtin\" or \"factors\"");
}

Json scalar_to_json(const Scalar& v) {
  if (v.is_rational()) return rat_str(v.rational());
  const Series& s = v.series();
  Json coeffs = Json::array();
  for (int e = s.lo(); e <= s.order(); ++e) coeffs.push_back(rat_str(s.coeff(e)));
  return Json{{"coeffs", std::move(coeffs)}, {"lo", s.lo()}, {"order", s.order()}};
}

Json matrix_to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(scalar_to_json(cell));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace toep
