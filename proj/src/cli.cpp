#include "toep/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "toep/asymptotics.hpp"
#include "toep/biorthogonal.hpp"
#include "toep/closedforms.hpp"
#include "toep/error.hpp"
#include "toep/json_io.hpp"
#include "toep/oracle.hpp"
#include "toep/symfunc.hpp"
#include "toep/toeplitz.hpp"

namespace toep {

namespace {

enum class Format { Plain, JsonOut, Csv, Markdown };

struct Context {
  Format fmt = Format::Plain;
  long jobs = 1;
  unsigned long long seed = 1;
  std::ostream* out = nullptr;
};

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += "\"\"";
    else quoted += ch;
  }
  return quoted + "\"";
}

struct TextTable {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;

  void render(const Context& ctx) const {
    std::ostream& out = *ctx.out;
    if (ctx.fmt == Format::JsonOut) {
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json obj = Json::object();
        for (std::size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump() << "\n";
      return;
    }
    if (ctx.fmt == Format::Markdown || ctx.fmt == Format::Plain) {
      auto line = [&](const std::vector<std::string>& cells) {
        out << "|";
        for (const auto& c : cells) out << " " << c << " |";
        out << "\n";
      };
      line(headers);
      out << "|";
      for (std::size_t i = 0; i < headers.size(); ++i) out << " --- |";
      out << "\n";
      for (const auto& row : rows) line(row);
      return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ",";
        out << csv_cell(cells[i]);
      }
      out << "\n";
    };
    line(headers);
    for (const auto& row : rows) line(row);
  }
};

void print_value(const Context& ctx, const Scalar& v) {
  if (ctx.fmt == Format::JsonOut)
    *ctx.out << Json{{"value", scalar_to_json(v)}}.dump() << "\n";
  else
    *ctx.out << v.str() << "\n";
}

// `extra` lands in the JSON object; text formats print the matrix alone and
// callers append their own trailing lines.
void print_matrix(const Context& ctx, const ScalarMatrix& m,
                  const std::vector<std::pair<std::string, Json>>& extra = {}) {
  std::ostream& out = *ctx.out;
  if (ctx.fmt == Format::JsonOut) {
    Json obj{{"matrix", matrix_to_json(m)}};
    for (const auto& [k, v] : extra) obj[k] = v;
    out << obj.dump() << "\n";
    return;
  }
  if (ctx.fmt == Format::Markdown) {
    TextTable t;
    t.headers.push_back("row");
    for (std::size_t k = 0; k < (m.empty() ? 0 : m[0].size()); ++k)
      t.headers.push_back(std::to_string(k));
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::vector<std::string> row{std::to_string(j)};
      for (const auto& cell : m[j]) row.push_back(cell.str());
      t.rows.push_back(std::move(row));
    }
    t.render(ctx);
    return;
  }
  const char* sep = ctx.fmt == Format::Csv ? "," : " ";
  for (const auto& row : m) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out << sep;
      std::string cell = row[k].str();
      out << (ctx.fmt == Format::Csv ? csv_cell(cell) : cell);
    }
    out << "\n";
  }
}

// Request field access, naming the field in every failure.

const Json& req_field(const Json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) throw SchemaError(std::string(key) + ": required");
  return *it;
}

long req_long(const Json& req, const char* key) { return long_from_json(req_field(req, key), key); }

long req_long_or(const Json& req, const char* key, long dflt) {
  return req.contains(key) ? long_from_json(req[key], key) : dflt;
}

bool req_bool_or(const Json& req, const char* key, bool dflt) {
  if (!req.contains(key)) return dflt;
  if (!req[key].is_boolean()) throw SchemaError(std::string(key) + ": expected a boolean");
  return req[key].get<bool>();
}

std::string req_string(const Json& req, const char* key) {
  const Json& v = req_field(req, key);
  if (!v.is_string()) throw SchemaError(std::string(key) + ": expected a string");
  return v.get<std::string>();
}

std::string req_string_or(const Json& req, const char* key, const std::string& dflt) {
  if (!req.contains(key)) return dflt;
  if (!req[key].is_string()) throw SchemaError(std::string(key) + ": expected a string");
  return req[key].get<std::string>();
}

Symbol req_symbol(const Json& req) { return symbol_from_json(req_field(req, "symbol"), "symbol"); }

Partition req_partition_or(const Json& req, const char* key) {
  if (!req.contains(key)) return {};
  return partition_from_json(req[key], key);
}

// Shared shape helpers.

Partition ones_part(long k) { return Partition(static_cast<std::size_t>(std::max(0L, k)), 1); }

Partition single_part(long k) { return k > 0 ? Partition{k} : Partition{}; }

Partition rect_row(long N, long d, long j) {
  std::vector<long> parts(static_cast<std::size_t>(std::max(0L, d)), N);
  parts.push_back(j);
  return make_partition(std::move(parts), "shape");
}

Specialization ones_spec(long M) {
  return Specialization::finite_list(std::vector<Scalar>(static_cast<std::size_t>(M), Scalar(1)));
}

bool matrix_eq(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].size() != b[j].size()) return false;
    for (std::size_t k = 0; k < a[j].size(); ++k)
      if (!scalar_eq(a[j][k], b[j][k])) return false;
  }
  return true;
}

// ---- simple value commands ----

int cmd_det(const Json& req, Context& ctx) {
  long N = req_long(req, "N");
  if (!req.contains("symbol")) {
    if (N == 0) {
      print_value(ctx, Scalar(1));
      return 0;
    }
    throw SchemaError("symbol: required when N > 0");
  }
  print_value(ctx, toeplitz_determinant(req_symbol(req), N));
  return 0;
}

int cmd_minor(const Json& req, Context& ctx) {
  Symbol f = req_symbol(req);
  long N = req_long(req, "N");
  print_value(ctx, toeplitz_minor_det(f, N, req_partition_or(req, "lambda"),
                                      req_partition_or(req, "mu")));
  return 0;
}

int cmd_inverse(const Json& req, Context& ctx) {
  print_matrix(ctx, exact_inverse(req_symbol(req), req_long(req, "N")));
  return 0;
}

int cmd_skewschur(const Json& req, Context& ctx) {
  Partition outer = partition_from_json(req_field(req, "outer"), "outer");
  Partition inner = req_partition_or(req, "inner");
  Specialization x = specialization_from_json(req_field(req, "spec"), "spec");
  std::string basis = req_string_or(req, "basis", "H");
  if (basis != "H" && basis != "E") throw SchemaError("basis: expected H or E");
  print_value(ctx, skew_schur(outer, inner, x, basis == "H" ? SchurBasis::H : SchurBasis::E));
  return 0;
}

// ---- closedform ----

int cmd_closedform(const Json& req, Context& ctx) {
  std::string id = req_string(req, "formula");
  Json params = req.contains("params") ? req["params"] : Json::object();
  if (!params.is_object()) throw SchemaError("params: expected a JSON object");
  bool verify = req_bool_or(req, "verify", false);

  auto pf = [&](const char* k) -> const Json& {
    auto it = params.find(k);
    if (it == params.end()) throw SchemaError(std::string("params.") + k + ": required");
    return *it;
  };
  auto pl = [&](const char* k) { return long_from_json(pf(k), std::string("params.") + k); };
  auto ps = [&](const char* k) { return scalar_from_json(pf(k), std::string("params.") + k); };
  auto pr = [&](const char* k) { return rational_from_json(pf(k), std::string("params.") + k); };
  auto ppart = [&](const char* k) { return partition_from_json(pf(k), std::string("params.") + k); };
  auto pseries = [&](const char* k) {
    Scalar s = ps(k);
    if (!s.is_series()) throw InputError(std::string("params.") + k + ": needs a series value");
    return s.series();
  };

  std::optional<Scalar> value;
  std::optional<ScalarMatrix> matrix;
  std::optional<AsymptoticForm> asym;
  bool verify_ran = false;
  auto check = [&](bool ok, const char* route) {
    if (!ok) throw CheckError(id + ": closed form disagrees with " + route);
    verify_ran = true;
  };

  if (id == "chebyshev_u") {
    value = chebyshev_u(pl("n"), ps("c"));
    if (verify) throw InputError("chebyshev_u: it is itself the reference recurrence");
  } else if (id == "tridiag_det") {
    Scalar x = ps("x"), y = ps("y");
    long N = pl("N");
    value = tridiag_det(x, y, N);
    if (verify) {
      if (!x.is_rational() || !y.is_rational())
        throw InputError("verification needs rational x and y");
      check(scalar_eq(*value, toeplitz_determinant(
                                  Symbol::tridiagonal(x.rational(), y.rational()), N)),
            "the Toeplitz determinant");
    }
  } else if (id == "tridiag_inverse") {
    Scalar x = ps("x"), y = ps("y");
    long N = pl("N");
    matrix = tridiag_inverse(x, y, N);
    if (verify) {
      if (!x.is_rational() || !y.is_rational())
        throw InputError("verification needs rational x and y");
      check(matrix_eq(*matrix,
                      exact_inverse(Symbol::tridiagonal(x.rational(), y.rational()), N)),
            "the exact inverse");
    }
  } else if (id == "two_row_skew") {
    long N = pl("N"), j = pl("j"), k = pl("k");
    Scalar x = ps("x"), y = ps("y");
    value = two_row_skew(N, j, k, x, y);
    if (verify) {
      Scalar direct = skew_schur(make_partition({N, j}, "params"), single_part(k),
                                 Specialization::finite_list({x, Scalar(1) / y}), SchurBasis::H);
      check(scalar_eq(*value, direct), "the skew Schur evaluation");
    }
  } else if (id == "fh_determinant") {
    long gamma = pl("gamma"), delta = pl("delta"), N = pl("N");
    value = Scalar(fh_determinant(gamma, delta, N));
    if (verify)
      check(scalar_eq(*value, toeplitz_determinant(Symbol::pure_fh(gamma, delta), N)),
            "the Toeplitz determinant");
  } else if (id == "dr_inverse") {
    long gamma = pl("gamma"), delta = pl("delta"), N = pl("N");
    matrix = dr_inverse(gamma, delta, N);
    if (verify)
      check(matrix_eq(*matrix, exact_inverse(Symbol::pure_fh(gamma, delta), N)),
            "the exact inverse");
  } else if (id == "duduchava_roch") {
    if (!verify_duduchava_roch(pl("gamma"), pl("delta"), pl("N")))
      throw CheckError("duduchava_roch: identity failed");
    verify_ran = true;
  } else if (id == "evskew_fh") {
    long N = pl("N"), d = pl("d"), j = pl("j"), k = pl("k"), M = pl("M");
    value = Scalar(evskew_fh(N, d, j, k, M));
    if (verify)
      check(scalar_eq(*value, skew_schur(rect_row(N, d, j), single_part(k), ones_spec(M),
                                         SchurBasis::H)),
            "the skew Schur evaluation");
  } else if (id == "fh_minor_single" || id == "fh_minor_recursion") {
    Partition mu = ppart("mu");
    long gamma = pl("gamma"), delta = pl("delta"), N = pl("N");
    Rational v = id == "fh_minor_single" ? fh_minor_single(mu, gamma, delta, N)
                                         : fh_minor_via_recursion(mu, gamma, delta, N);
    value = Scalar(v);
    if (verify)
      check(scalar_eq(*value, det_scalar(minor_matrix(Symbol::pure_fh(gamma, delta), N, {}, mu))),
            "the minor determinant");
  } else if (id == "q_theta_determinant") {
    long gamma = pl("gamma"), delta = pl("delta"), N = pl("N");
    Scalar q = ps("q");
    value = q_theta_determinant(gamma, delta, N, q);
    if (verify)
      check(scalar_eq(*value, toeplitz_determinant(Symbol::theta_gd(gamma, delta, q), N)),
            "the Toeplitz determinant");
  } else if (id == "q_evskew") {
    long N = pl("N"), d = pl("d"), j = pl("j"), k = pl("k"), M = pl("M");
    Scalar q = ps("q");
    value = q_evskew(N, d, j, k, M, q);
    if (verify)
      check(scalar_eq(*value, skew_schur(rect_row(N, d, j), single_part(k),
                                         Specialization::principal(q, M), SchurBasis::H)),
            "the skew Schur evaluation");
  } else if (id == "theta_d_determinant") {
    long delta = pl("delta"), N = pl("N");
    Series q = pseries("q");
    value = Scalar(theta_d_determinant(delta, N, q));
    if (verify)
      check(scalar_eq(*value, toeplitz_determinant(Symbol::theta_d(delta, Scalar(q)), N)),
            "the Toeplitz determinant");
  } else if (id == "infinite_q_skew") {
    long N = pl("N"), d = pl("d"), j = pl("j"), k = pl("k");
    Series q = pseries("q");
    value = Scalar(infinite_q_skew(N, d, j, k, q));
    if (verify)
      check(scalar_eq(*value, skew_schur(rect_row(N, d, j), single_part(k),
                                         Specialization::principal_infinite(Scalar(q)),
                                         SchurBasis::H)),
            "the skew Schur evaluation");
  } else if (id == "asymptotic") {
    std::string kind = [&] {
      const Json& kj = pf("kind");
      if (!kj.is_string()) throw SchemaError("params.kind: expected a string");
      return kj.get<std::string>();
    }();
    if (kind == "tridiag") asym = asymptotic_tridiag(pl("j"), pl("k"), ps("x"), ps("y"));
    else if (kind == "fh") asym = asymptotic_fh(pl("d"), pl("j"), pl("k"), pl("M"));
    else if (kind == "q_principal")
      asym = asymptotic_q_principal(pl("d"), pl("j"), pl("k"), pl("M"), ps("q"));
    else if (kind == "q_infinite")
      asym = asymptotic_q_infinite(pl("d"), pl("j"), pl("k"), pseries("q"));
    else
      throw SchemaError("params.kind: one of tridiag, fh, q_principal, q_infinite");
    if (verify)
      throw InputError("asymptotic: records have no finite cross-check; use converge");
  } else {
    throw SchemaError(
        "formula: unknown id \"" + id +
        "\"; one of chebyshev_u, tridiag_det, tridiag_inverse, two_row_skew, fh_determinant, "
        "dr_inverse, duduchava_roch, evskew_fh, fh_minor_single, fh_minor_recursion, "
        "q_theta_determinant, q_evskew, theta_d_determinant, infinite_q_skew, asymptotic");
  }
  (void)pr;

  if (ctx.fmt == Format::JsonOut) {
    Json obj{{"formula", id}, {"parameters", params}};
    if (value) obj["value"] = scalar_to_json(*value);
    if (matrix) obj["matrix"] = matrix_to_json(*matrix);
    if (asym) {
      obj["factor"] = scalar_to_json(asym->factor);
      obj["constant"] = scalar_to_json(asym->constant);
      obj["n_power"] = asym->n_power;
      obj["q_exponent_n"] = rat_str(asym->q_exponent_n);
      obj["q_exponent_const"] = rat_str(asym->q_exponent_const);
      obj["note"] = asym->note;
    }
    if (verify_ran) obj["verified"] = true;
    *ctx.out << obj.dump() << "\n";
    return 0;
  }
  if (value) print_value(ctx, *value);
  if (matrix) print_matrix(ctx, *matrix);
  if (asym) {
    std::ostream& out = *ctx.out;
    out << "factor: " << asym->factor.str() << "\n";
    out << "constant: " << asym->constant.str() << "\n";
    out << "n_power: " << asym->n_power << "\n";
    out << "q_exponent_n: " << rat_str(asym->q_exponent_n) << "\n";
    out << "q_exponent_const: " << rat_str(asym->q_exponent_const) << "\n";
    out << "note: " << asym->note << "\n";
  }
  if (id == "duduchava_roch") *ctx.out << "ok\n";
  else if (verify_ran) *ctx.out << "verified\n";
  return 0;
}

// ---- biorth ----

BiorthogonalPair closed_pair_for(const Symbol& f, long j) {
  if (f.kind() == SymbolKind::ThetaGD) return closed_pair_theta(f.gamma(), f.delta(), j, f.q());
  if (f.kind() == SymbolKind::ThetaD) return closed_pair_theta_d(f.delta(), j, f.q());
  throw InputError("closed: closed pairs exist for theta_gd and theta_d symbols only");
}

KernelCoefficients closed_kernel_for(const Symbol& f, long N) {
  if (f.kind() == SymbolKind::ThetaGD)
    return kernel_closed_theta_gd(f.gamma(), f.delta(), N, f.q());
  if (f.kind() == SymbolKind::ThetaD) return kernel_closed_theta_d(f.delta(), N, f.q());
  throw InputError("closed: closed kernels exist for theta_gd and theta_d symbols only");
}

int cmd_biorth(const Json& req, Context& ctx) {
  std::string mode = req_string(req, "mode");
  Symbol f = req_symbol(req);
  bool closed = req_bool_or(req, "closed", false);
  if (mode == "pair") {
    long j = req_long(req, "j");
    BiorthogonalPair pr = closed ? closed_pair_for(f, j) : bordered_pair(f, j);
    if (ctx.fmt == Format::JsonOut) {
      Json pj = Json::array(), qj = Json::array();
      for (const auto& c : pr.p_coeffs) pj.push_back(scalar_to_json(c));
      for (const auto& c : pr.q_coeffs) qj.push_back(scalar_to_json(c));
      *ctx.out << Json{{"p", std::move(pj)},
                       {"q", std::move(qj)},
                       {"norm2", scalar_to_json(pr.norm2)}}
                      .dump()
               << "\n";
      return 0;
    }
    if (ctx.fmt == Format::Csv || ctx.fmt == Format::Markdown) {
      TextTable t;
      t.headers = {"poly", "exponent", "coefficient"};
      for (std::size_t r = 0; r < pr.p_coeffs.size(); ++r)
        t.rows.push_back({"p", std::to_string(r), pr.p_coeffs[r].str()});
      for (std::size_t r = 0; r < pr.q_coeffs.size(); ++r)
        t.rows.push_back({"q", std::to_string(r), pr.q_coeffs[r].str()});
      t.rows.push_back({"norm2", "", pr.norm2.str()});
      t.render(ctx);
      return 0;
    }
    std::ostream& out = *ctx.out;
    for (std::size_t r = 0; r < pr.p_coeffs.size(); ++r)
      out << "p[" << r << "]: " << pr.p_coeffs[r].str() << "\n";
    for (std::size_t r = 0; r < pr.q_coeffs.size(); ++r)
      out << "q[" << r << "]: " << pr.q_coeffs[r].str() << "\n";
    out << "norm2: " << pr.norm2.str() << "\n";
    return 0;
  }
  if (mode == "kernel") {
    long N = req_long(req, "N");
    KernelCoefficients kc = closed ? closed_kernel_for(f, N) : kernel_coefficients(f, N);
    bool check_inverse = req_bool_or(req, "verify_inverse", false);
    if (check_inverse && !matrix_eq(kc.c, exact_inverse(f, N)))
      throw CheckError("kernel: coefficients disagree with the exact inverse");
    std::vector<std::pair<std::string, Json>> extra;
    if (check_inverse) extra.emplace_back("inverse_check", true);
    print_matrix(ctx, kc.c, extra);
    if (check_inverse && ctx.fmt == Format::Plain) *ctx.out << "inverse check: ok\n";
    return 0;
  }
  throw SchemaError("mode: expected pair or kernel");
}

// ---- oracle ----

int cmd_oracle(const Json& req, Context& ctx) {
  std::string mode = req_string(req, "mode");
  Partition lam = req_partition_or(req, "lambda");
  Partition mu = req_partition_or(req, "mu");
  long N = req_long(req, "N");
  bool compare = req_bool_or(req, "compare", false);
  Rational val;
  Scalar direct;
  if (mode == "heine") {
    Symbol f = req_symbol(req);
    val = heine_minor(f, lam, mu, N);
    if (compare) direct = toeplitz_minor_det(f, N, lam, mu);
  } else if (mode == "morris") {
    long gamma = req_long(req, "gamma"), delta = req_long(req, "delta");
    val = morris_value(gamma, delta, lam, mu, N);
    if (compare) direct = toeplitz_minor_det(Symbol::pure_fh(gamma, delta), N, lam, mu);
  } else {
    throw SchemaError("mode: expected heine or morris");
  }
  if (compare && !scalar_eq(Scalar(val), direct))
    throw CheckError(mode + ": oracle value disagrees with the minor determinant");
  if (ctx.fmt == Format::JsonOut) {
    Json obj{{"value", rat_str(val)}};
    if (compare) obj["agrees"] = true;
    *ctx.out << obj.dump() << "\n";
    return 0;
  }
  *ctx.out << rat_str(val) << "\n";
  if (compare) *ctx.out << "agreement: ok\n";
  return 0;
}

// ---- table1 ----

int cmd_table1(const Json& req, Context& ctx) {
  const Json& pj = req_field(req, "profile");
  if (!pj.is_object()) throw SchemaError("profile: expected {\"plus\": [...], \"minus\": [...]}");
  auto read_side = [&](const char* key) {
    std::vector<Scalar> side;
    if (!pj.contains(key)) return side;
    const Json& arr = pj[key];
    if (!arr.is_array())
      throw SchemaError(std::string("profile.") + key + ": expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i)
      side.push_back(scalar_from_json(arr[i], std::string("profile.") + key + "[" +
                                                  std::to_string(i) + "]"));
    return side;
  };
  LogCoefficients c{read_side("plus"), read_side("minus")};
  // The eight tabulated shapes reach weight 4 on the mu side and 2 on lambda.
  if (c.plus.size() < 4) throw SchemaError("profile.plus: the table needs c_1 through c_4");
  if (c.minus.size() < 2) throw SchemaError("profile.minus: the table needs c_-1 and c_-2");
  // Coefficients beyond weight(lambda) on the minus side only feed Laguerre
  // arguments at index 0, which are constant 1, so zero padding is exact.
  while (c.minus.size() < 4) c.minus.push_back(Scalar(0));
  std::vector<Scalar> hx = h_from_profile(c.plus, 4);
  std::vector<Scalar> hy = h_from_profile(c.minus, 2);

  static const std::vector<std::pair<Partition, Partition>> shapes = {
      {{}, {1}},      {{}, {2}},      {{}, {1, 1}}, {{}, {3}},
      {{}, {1, 1, 1}}, {{}, {2, 2}},  {{1, 1}, {1, 1}}, {{1}, {3}},
  };

  TextTable t;
  t.headers = {"lambda", "mu", "character_sum", "skew_sum", "equal"};
  for (const auto& [lam, mu] : shapes) {
    Scalar bd = character_sum(lam, mu, c);
    Scalar sk = Scalar(0);
    for (const Partition& nu : subpartitions(lam))
      sk += jacobi_trudi_det(hy, lam, nu) * jacobi_trudi_det(hx, mu, nu);
    t.rows.push_back({partition_str(lam), partition_str(mu), bd.str(), sk.str(),
                      scalar_eq(bd, sk) ? "true" : "false"});
  }
  t.render(ctx);
  return 0;
}

// ---- converge ----

int cmd_converge(const Json& req, Context& ctx) {
  Symbol f = req_symbol(req);
  auto rows = convergence_table(f, req_partition_or(req, "lambda"), req_partition_or(req, "mu"),
                                req_long(req, "N_max"));
  TextTable t;
  t.headers = {"N",      "minor",     "determinant",   "ratio",
               "target", "abs_error", "ratio_decimal", "error_decimal"};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.N), rat_str(r.minor_value), rat_str(r.det_value),
                      rat_str(r.ratio), rat_str(r.target), rat_str(r.abs_error),
                      rat_decimal(r.ratio), rat_decimal(r.abs_error)});
  t.render(ctx);
  return 0;
}

// ---- verify ----

struct VerifyGrid {
  std::string label;
  std::function<std::string()> run;  // empty string means the grid passed
};

struct IdentityRun {
  std::string name;
  std::vector<VerifyGrid> grids;
};

struct VBudget {
  bool quick = false;
  long n_override = 0;  // 0 keeps suite defaults

  long cap(long dflt, long quick_dflt) const {
    if (n_override > 0) return n_override;
    return quick ? quick_dflt : dflt;
  }
};

std::string mismatch(const std::string& where) { return where + ": value mismatch"; }

std::vector<Scalar> random_values(std::mt19937_64& rng, long count) {
  // |value| <= 2/3 keeps every product x_j y_k away from 1, so stabilized
  // determinants never hit a pole of the Cauchy product.
  std::uniform_int_distribution<long> num(1, 2), den(3, 5), sign(0, 1);
  std::vector<Scalar> xs;
  for (long i = 0; i < count; ++i) {
    Rational r(num(rng), den(rng));
    if (sign(rng)) r = -r;
    xs.push_back(Scalar(r));
  }
  return xs;
}

const std::vector<std::pair<Partition, Partition>>& table_shapes() {
  static const std::vector<std::pair<Partition, Partition>> shapes = {
      {{}, {1}},      {{}, {2}},      {{}, {1, 1}}, {{}, {3}},
      {{}, {1, 1, 1}}, {{}, {2, 2}},  {{1, 1}, {1, 1}}, {{1}, {3}},
  };
  return shapes;
}

std::vector<Symbol> builtin_symbols() {
  Series t8 = Series::monomial(Rational(1), 1, 8);
  return {Symbol::pure_fh(1, 1), Symbol::pure_fh(2, 1),
          Symbol::tridiagonal(Rational(1, 2), Rational(1, 3)),
          Symbol::theta_gd(1, 1, Scalar(Rational(1, 2))), Symbol::theta_d(1, Scalar(t8))};
}

std::vector<IdentityRun> gessel_suite(const VBudget& b, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  long profiles = b.quick ? 2 : 3;
  IdentityRun expansion{"schur_expansion", {}};
  IdentityRun factorization{"minor_factorization", {}};
  IdentityRun dual{"dual_minor_schur", {}};
  const std::vector<std::pair<Partition, Partition>> shapes = {
      {{1}, {1}}, {{1}, {2, 1}}, {{2}, {1, 1}}};
  long nmax = b.cap(4, 3);
  for (long p = 1; p <= profiles; ++p) {
    auto y = Specialization::finite_list(random_values(rng, 2));
    auto x = Specialization::finite_list(random_values(rng, 2));
    std::string label = "profile " + std::to_string(p);
    expansion.grids.push_back({label, [=] {
      for (long N = 2; N <= std::min(nmax, 3L); ++N) {
        VerifyReport r = verify_schur_expansion(y, x, N, 6);
        if (!r.ok) return "N=" + std::to_string(N) + " " + r.identity + ": " + r.detail;
      }
      return std::string();
    }});
    factorization.grids.push_back({label, [=] {
      for (const auto& [lam, mu] : shapes)
        for (long N = 3; N <= nmax; ++N) {
          VerifyReport r = verify_minor_factorization(y, x, lam, mu, N, 6);
          if (!r.ok)
            return partition_str(lam) + "," + partition_str(mu) + " N=" + std::to_string(N) +
                   " " + r.identity + ": " + r.detail;
        }
      return std::string();
    }});
    dual.grids.push_back({label, [=] {
      for (const auto& [lam, mu] : shapes)
        for (long N = 3; N <= nmax; ++N) {
          VerifyReport r = verify_dual_minor_schur(y, x, lam, mu, N);
          if (!r.ok)
            return partition_str(lam) + "," + partition_str(mu) + " N=" + std::to_string(N) +
                   " " + r.identity + ": " + r.detail;
        }
      return std::string();
    }});
  }
  return {expansion, factorization, dual};
}

std::vector<IdentityRun> baxter_suite(const VBudget& b, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  long profiles = b.quick ? 2 : 3;
  IdentityRun stable{"stable_product", {}};
  IdentityRun character{"character_vs_skew", {}};
  for (long p = 1; p <= profiles; ++p) {
    auto y = Specialization::finite_list(random_values(rng, 2));
    auto x = Specialization::finite_list(random_values(rng, 2));
    std::string label = "profile " + std::to_string(p);
    long nmax = b.cap(4, 3);
    stable.grids.push_back({label, [=] {
      for (long N = 2; N <= nmax; ++N) {
        VerifyReport r = verify_stable_product(y, x, N, 6);
        if (!r.ok) return "N=" + std::to_string(N) + " " + r.identity + ": " + r.detail;
      }
      return std::string();
    }});
    character.grids.push_back({label, [=] {
      for (SchurBasis basis : {SchurBasis::H, SchurBasis::E}) {
        LogCoefficients c = log_coefficients(TwoSidedSpecs{y, x, basis}, 4);
        for (const auto& [lam, mu] : table_shapes()) {
          Scalar lhs = character_sum(lam, mu, c);
          Scalar rhs = skew_pair_sum(lam, mu, y, x, basis);
          if (!scalar_eq(lhs, rhs))
            return mismatch((basis == SchurBasis::H ? std::string("H ") : std::string("E ")) +
                            partition_str(lam) + "," + partition_str(mu));
        }
      }
      return std::string();
    }});
  }
  IdentityRun inv{"minor_vs_inverse", {}};
  long nmax = b.cap(3, 2);
  for (const Symbol& f : builtin_symbols()) {
    inv.grids.push_back({f.str(), [=] {
      for (long N = 1; N <= nmax; ++N)
        for (long j = 0; j <= std::min(N, 2L); ++j)
          for (long k = 0; k <= std::min(N, 2L); ++k) {
            Scalar lhs = minor_from_inverse(f, j, k, N);
            Scalar rhs = toeplitz_minor_det(f, N, ones_part(k), ones_part(j));
            if (!scalar_eq(lhs, rhs))
              return mismatch("N=" + std::to_string(N) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k));
          }
      return std::string();
    }});
  }
  return {stable, inv, character};
}

std::vector<IdentityRun> dr_suite(const VBudget& b) {
  IdentityRun dr{"duduchava_roch", {}};
  long nmax = b.cap(4, 3);
  for (long gamma = 1; gamma <= 3; ++gamma)
    for (long delta = 1; delta <= 3; ++delta) {
      std::string label = "gamma=" + std::to_string(gamma) + " delta=" + std::to_string(delta);
      dr.grids.push_back({label, [=] {
        for (long N = 1; N <= nmax; ++N) {
          if (!verify_duduchava_roch(gamma, delta, N))
            return "N=" + std::to_string(N) + ": matrix identity failed";
          if (!matrix_eq(dr_inverse(gamma, delta, N),
                         exact_inverse(Symbol::pure_fh(gamma, delta), N)))
            return mismatch("N=" + std::to_string(N) + " inverse");
        }
        return std::string();
      }});
    }
  return {dr};
}

std::vector<IdentityRun> biorth_suite(const VBudget& b) {
  IdentityRun ortho{"biorthogonality", {}};
  IdentityRun kernel{"kernel_vs_inverse", {}};
  long maxj = b.cap(3, 2);
  long nmax = b.cap(3, 2);
  for (const Symbol& f : builtin_symbols()) {
    ortho.grids.push_back({f.str(), [=] {
      std::vector<BiorthogonalPair> ps;
      for (long j = 0; j <= maxj; ++j) ps.push_back(bordered_pair(f, j));
      for (long j = 0; j <= maxj; ++j)
        for (long k = 0; k <= maxj; ++k) {
          Scalar pv = pairing_value(f, ps[j].p_coeffs, ps[k].q_coeffs);
          Scalar expected = j == k ? ps[j].norm2 : Scalar(0);
          if (!scalar_eq(pv, expected))
            return mismatch("j=" + std::to_string(j) + " k=" + std::to_string(k));
        }
      return std::string();
    }});
    kernel.grids.push_back({f.str(), [=] {
      for (long N = 1; N <= nmax; ++N)
        if (!matrix_eq(kernel_coefficients(f, N).c, exact_inverse(f, N)))
          return mismatch("N=" + std::to_string(N));
      return std::string();
    }});
  }
  IdentityRun closed{"closed_pair_vs_bordered", {}};
  Scalar q_half(Rational(1, 2));
  Scalar t8(Series::monomial(Rational(1), 1, 8));
  long maxj_closed = b.quick ? 2 : 3;
  for (long gamma = 1; gamma <= 2; ++gamma)
    for (long delta = 1; delta <= 2; ++delta) {
      Symbol f = Symbol::theta_gd(gamma, delta, q_half);
      closed.grids.push_back({f.str(), [=] {
        for (long j = 0; j <= maxj_closed; ++j) {
          BiorthogonalPair a = closed_pair_theta(gamma, delta, j, q_half);
          BiorthogonalPair d = bordered_pair(f, j);
          for (long r = 0; r <= j; ++r)
            if (!scalar_eq(a.p_coeffs[r], d.p_coeffs[r]) ||
                !scalar_eq(a.q_coeffs[r], d.q_coeffs[r]))
              return mismatch("j=" + std::to_string(j) + " r=" + std::to_string(r));
          if (!scalar_eq(a.norm2, d.norm2)) return mismatch("j=" + std::to_string(j) + " norm2");
        }
        return std::string();
      }});
    }
  for (long delta = 1; delta <= 2; ++delta) {
    Symbol f = Symbol::theta_d(delta, t8);
    closed.grids.push_back({f.str(), [=] {
      for (long j = 0; j <= maxj_closed; ++j) {
        BiorthogonalPair a = closed_pair_theta_d(delta, j, t8);
        BiorthogonalPair d = bordered_pair(f, j);
        for (long r = 0; r <= j; ++r)
          if (!scalar_eq(a.p_coeffs[r], d.p_coeffs[r]) ||
              !scalar_eq(a.q_coeffs[r], d.q_coeffs[r]))
            return mismatch("j=" + std::to_string(j) + " r=" + std::to_string(r));
        if (!scalar_eq(a.norm2, d.norm2)) return mismatch("j=" + std::to_string(j) + " norm2");
      }
      return std::string();
    }});
  }
  return {ortho, kernel, closed};
}

std::vector<IdentityRun> oracle_suite(const VBudget& b) {
  long cap = std::min(oracle_cap(), b.cap(3, 2));
  const std::vector<std::pair<Partition, Partition>> shapes = {
      {{}, {}}, {{}, {1}}, {{1}, {1}}, {{1, 1}, {2}}, {{2}, {2, 1}}};
  IdentityRun heine{"heine_vs_minor", {}};
  std::vector<Symbol> rational_symbols = {
      Symbol::pure_fh(1, 1), Symbol::pure_fh(2, 1),
      Symbol::tridiagonal(Rational(1, 2), Rational(1, 3)),
      Symbol::theta_gd(1, 1, Scalar(Rational(1, 2)))};
  for (const Symbol& f : rational_symbols) {
    heine.grids.push_back({f.str(), [=] {
      for (const auto& [lam, mu] : shapes)
        for (long N = std::max({1L, length(lam), length(mu)}); N <= cap; ++N) {
          Rational lhs = heine_minor(f, lam, mu, N);
          Scalar rhs = toeplitz_minor_det(f, N, lam, mu);
          if (!scalar_eq(Scalar(lhs), rhs))
            return mismatch(partition_str(lam) + "," + partition_str(mu) +
                            " N=" + std::to_string(N));
        }
      return std::string();
    }});
  }
  IdentityRun morris{"morris_vs_minor", {}};
  for (long gamma = 1; gamma <= 2; ++gamma)
    for (long delta = 1; delta <= 2; ++delta) {
      std::string label = "gamma=" + std::to_string(gamma) + " delta=" + std::to_string(delta);
      morris.grids.push_back({label, [=] {
        Symbol f = Symbol::pure_fh(gamma, delta);
        for (const auto& [lam, mu] : shapes)
          for (long N = std::max({1L, length(lam), length(mu)}); N <= cap; ++N) {
            Rational lhs = morris_value(gamma, delta, lam, mu, N);
            Scalar rhs = toeplitz_minor_det(f, N, lam, mu);
            if (!scalar_eq(Scalar(lhs), rhs))
              return mismatch(partition_str(lam) + "," + partition_str(mu) +
                              " N=" + std::to_string(N));
          }
        return std::string();
      }});
    }
  return {heine, morris};
}

std::vector<IdentityRun> closedforms_suite(const VBudget& b) {
  IdentityRun tridiag{"tridiagonal_forms", {}};
  const std::vector<std::pair<Rational, Rational>> xy = {
      {Rational(1), Rational(1)}, {Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(1, 2)}};
  long nmax = b.cap(4, 3);
  for (const auto& [x, y] : xy) {
    std::string label = "x=" + rat_str(x) + " y=" + rat_str(y);
    tridiag.grids.push_back({label, [=, x = x, y = y] {
      Symbol f = Symbol::tridiagonal(x, y);
      Scalar xs(x), ys(y);
      for (long N = 0; N <= nmax; ++N)
        if (!scalar_eq(tridiag_det(xs, ys, N), toeplitz_determinant(f, N)))
          return mismatch("det N=" + std::to_string(N));
      for (long N = 1; N <= std::min(nmax, 3L); ++N)
        if (!matrix_eq(tridiag_inverse(xs, ys, N), exact_inverse(f, N)))
          return mismatch("inverse N=" + std::to_string(N));
      Specialization pair = Specialization::finite_list({xs, Scalar(1) / ys});
      for (long N = 0; N <= std::min(nmax, 3L); ++N)
        for (long j = 0; j <= N; ++j)
          for (long k = 0; k <= N; ++k)
            if (!scalar_eq(two_row_skew(N, j, k, xs, ys),
                           skew_schur(make_partition({N, j}, "shape"), single_part(k), pair,
                                      SchurBasis::H)))
              return mismatch("skew N=" + std::to_string(N) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k));
      return std::string();
    }});
  }

  IdentityRun fh{"fh_forms", {}};
  const std::vector<std::pair<long, long>> gd = {{1, 1}, {2, 1}, {2, 2}};
  const std::vector<Partition> mus = {{1}, {2, 1}, {2, 2}};
  for (const auto& [gamma, delta] : gd) {
    std::string label = "gamma=" + std::to_string(gamma) + " delta=" + std::to_string(delta);
    fh.grids.push_back({label, [=, gamma = gamma, delta = delta] {
      Symbol f = Symbol::pure_fh(gamma, delta);
      for (long N = 0; N <= nmax + 1; ++N)
        if (!scalar_eq(Scalar(fh_determinant(gamma, delta, N)), toeplitz_determinant(f, N)))
          return mismatch("det N=" + std::to_string(N));
      for (long N = 1; N <= std::min(nmax, 3L); ++N)
        if (!matrix_eq(dr_inverse(gamma, delta, N), exact_inverse(f, N)))
          return mismatch("inverse N=" + std::to_string(N));
      for (const Partition& mu : mus)
        for (long N = std::max(length(mu), 2L); N <= nmax; ++N) {
          Scalar direct = det_scalar(minor_matrix(f, N, {}, mu));
          if (!scalar_eq(Scalar(fh_minor_single(mu, gamma, delta, N)), direct))
            return mismatch("minor " + partition_str(mu) + " N=" + std::to_string(N));
          if (!scalar_eq(Scalar(fh_minor_via_recursion(mu, gamma, delta, N)), direct))
            return mismatch("minor recursion " + partition_str(mu) + " N=" + std::to_string(N));
        }
      return std::string();
    }});
  }

  IdentityRun rect{"rectangle_row_forms", {}};
  Scalar q_half(Rational(1, 2));
  for (long d = 1; d <= 2; ++d) {
    rect.grids.push_back({"d=" + std::to_string(d), [=] {
      for (long N = 0; N <= std::min(nmax, 3L); ++N)
        for (long j = 0; j <= std::min(N, 2L); ++j)
          for (long k = 0; k <= std::min(N, 2L); ++k)
            for (long M = d + 1; M <= 4; ++M) {
              Partition outer = rect_row(N, d, j);
              if (!scalar_eq(Scalar(evskew_fh(N, d, j, k, M)),
                             skew_schur(outer, single_part(k), ones_spec(M), SchurBasis::H)))
                return mismatch("ones N=" + std::to_string(N) + " j=" + std::to_string(j) +
                                " k=" + std::to_string(k) + " M=" + std::to_string(M));
              if (M <= 3 && N <= 2 &&
                  !scalar_eq(q_evskew(N, d, j, k, M, q_half),
                             skew_schur(outer, single_part(k),
                                        Specialization::principal(q_half, M), SchurBasis::H)))
                return mismatch("principal N=" + std::to_string(N) + " j=" + std::to_string(j) +
                                " k=" + std::to_string(k) + " M=" + std::to_string(M));
            }
      return std::string();
    }});
  }

  IdentityRun qtheta{"q_theta_forms", {}};
  for (const auto& [gamma, delta] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}}) {
    std::string label = "gamma=" + std::to_string(gamma) + " delta=" + std::to_string(delta);
    qtheta.grids.push_back({label, [=, gamma = gamma, delta = delta] {
      Symbol f = Symbol::theta_gd(gamma, delta, q_half);
      for (long N = 0; N <= std::min(nmax, 3L); ++N)
        if (!scalar_eq(q_theta_determinant(gamma, delta, N, q_half), toeplitz_determinant(f, N)))
          return mismatch("det N=" + std::to_string(N));
      for (long N = 1; N <= 2; ++N)
        if (!matrix_eq(kernel_closed_theta_gd(gamma, delta, N, q_half).c, exact_inverse(f, N)))
          return mismatch("kernel N=" + std::to_string(N));
      return std::string();
    }});
  }

  IdentityRun thetad{"theta_d_forms", {}};
  Series t8 = Series::monomial(Rational(1), 1, 8);
  for (long delta = 1; delta <= 2; ++delta) {
    thetad.grids.push_back({"delta=" + std::to_string(delta), [=] {
      Symbol f = Symbol::theta_d(delta, Scalar(t8));
      for (long N = 1; N <= std::min(nmax, 3L); ++N)
        if (!scalar_eq(Scalar(theta_d_determinant(delta, N, t8)), toeplitz_determinant(f, N)))
          return mismatch("det N=" + std::to_string(N));
      Specialization inf = Specialization::principal_infinite(Scalar(t8));
      for (long N = 0; N <= 2; ++N)
        for (long j = 0; j <= N; ++j)
          for (long k = 0; k <= N; ++k)
            if (!scalar_eq(Scalar(infinite_q_skew(N, delta, j, k, t8)),
                           skew_schur(rect_row(N, delta, j), single_part(k), inf, SchurBasis::H)))
              return mismatch("skew N=" + std::to_string(N) + " j=" + std::to_string(j) +
                              " k=" + std::to_string(k));
      return std::string();
    }});
  }
  return {tridiag, fh, rect, qtheta, thetad};
}

// Deterministic assembly: results land in preallocated slots, so the report
// is independent of worker scheduling.
std::vector<std::vector<std::string>> run_identity_grids(const std::vector<IdentityRun>& ids,
                                                         long jobs) {
  struct Task {
    std::size_t id;
    std::size_t grid;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<std::string>> results(ids.size());
  for (std::size_t a = 0; a < ids.size(); ++a) {
    results[a].resize(ids[a].grids.size());
    for (std::size_t g = 0; g < ids[a].grids.size(); ++g) tasks.push_back({a, g});
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      const Task& t = tasks[i];
      try {
        results[t.id][t.grid] = ids[t.id].grids[t.grid].run();
      } catch (const std::exception& e) {
        results[t.id][t.grid] = e.what();
      }
    }
  };
  long n = std::max(1L, std::min<long>(jobs, static_cast<long>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

int cmd_verify(const Json& req, Context& ctx) {
  std::string suite = req_string_or(req, "suite", "all");
  static const std::set<std::string> known = {"all",    "gessel", "baxter",     "dr",
                                             "biorth", "oracle", "closedforms"};
  if (!known.count(suite))
    throw SchemaError("suite: one of all, gessel, baxter, dr, biorth, oracle, closedforms");
  VBudget b{req_bool_or(req, "quick", false), req_long_or(req, "N", 0)};

  std::vector<IdentityRun> ids;
  auto append = [&](std::vector<IdentityRun> more) {
    for (auto& m : more) ids.push_back(std::move(m));
  };
  if (suite == "all" || suite == "gessel") append(gessel_suite(b, ctx.seed));
  if (suite == "all" || suite == "baxter") append(baxter_suite(b, ctx.seed));
  if (suite == "all" || suite == "dr") append(dr_suite(b));
  if (suite == "all" || suite == "biorth") append(biorth_suite(b));
  if (suite == "all" || suite == "oracle") append(oracle_suite(b));
  if (suite == "all" || suite == "closedforms") append(closedforms_suite(b));

  auto results = run_identity_grids(ids, ctx.jobs);

  bool all_ok = true;
  if (ctx.fmt == Format::JsonOut) {
    Json arr = Json::array();
    for (std::size_t a = 0; a < ids.size(); ++a) {
      Json failures = Json::array();
      for (std::size_t g = 0; g < results[a].size(); ++g)
        if (!results[a][g].empty())
          failures.push_back(Json{{"grid", ids[a].grids[g].label}, {"detail", results[a][g]}});
      long ok = static_cast<long>(results[a].size()) - static_cast<long>(failures.size());
      if (!failures.empty()) all_ok = false;
      arr.push_back(Json{{"identity", ids[a].name},
                         {"grids_ok", ok},
                         {"grids_total", results[a].size()},
                         {"failures", std::move(failures)}});
    }
    *ctx.out << arr.dump() << "\n";
  } else if (ctx.fmt == Format::Csv || ctx.fmt == Format::Markdown) {
    TextTable t;
    t.headers = {"identity", "grids_ok", "grids_total"};
    for (std::size_t a = 0; a < ids.size(); ++a) {
      long ok = 0;
      for (const auto& r : results[a])
        if (r.empty()) ++ok;
      if (ok != static_cast<long>(results[a].size())) all_ok = false;
      t.rows.push_back({ids[a].name, std::to_string(ok), std::to_string(results[a].size())});
    }
    t.render(ctx);
  } else {
    std::ostream& out = *ctx.out;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      long ok = 0;
      for (const auto& r : results[a])
        if (r.empty()) ++ok;
      out << ids[a].name << ": " << ok << "/" << results[a].size() << " grids OK\n";
      for (std::size_t g = 0; g < results[a].size(); ++g)
        if (!results[a][g].empty()) {
          out << "  FAIL " << ids[a].grids[g].label << ": " << results[a][g] << "\n";
          all_ok = false;
        }
    }
  }
  return all_ok ? 0 : 1;
}

// ---- flag plumbing ----

// Collects parsed flags into the request object, so flag invocations and
// --request files feed the same handlers. Flags override file fields.
struct FlagSet {
  CLI::App* cmd;
  std::string request_file;
  std::vector<std::function<void(Json&)>> setters;

  explicit FlagSet(CLI::App* c) : cmd(c) {
    cmd->add_option("--request", request_file,
                    "JSON file carrying the same fields as the flags");
  }

  void json_flag(const std::string& name, const std::string& key, const std::string& desc) {
    auto buf = std::make_shared<std::string>();
    CLI::Option* o = cmd->add_option(name, *buf, desc);
    setters.push_back([o, buf, key](Json& req) {
      if (o->count()) req[key] = parse_json_text(*buf, key);
    });
  }

  void text_flag(const std::string& name, const std::string& key, const std::string& desc) {
    auto buf = std::make_shared<std::string>();
    CLI::Option* o = cmd->add_option(name, *buf, desc);
    setters.push_back([o, buf, key](Json& req) {
      if (o->count()) req[key] = *buf;
    });
  }

  void int_flag(const std::string& name, const std::string& key, const std::string& desc) {
    auto buf = std::make_shared<long>(0);
    CLI::Option* o = cmd->add_option(name, *buf, desc);
    setters.push_back([o, buf, key](Json& req) {
      if (o->count()) req[key] = *buf;
    });
  }

  void bool_flag(const std::string& name, const std::string& key, const std::string& desc) {
    auto buf = std::make_shared<bool>(false);
    CLI::Option* o = cmd->add_flag(name, *buf, desc);
    setters.push_back([o, buf, key](Json& req) {
      if (o->count()) req[key] = *buf;
    });
  }

  Json build() const {
    Json req = Json::object();
    if (!request_file.empty()) {
      std::ifstream in(request_file);
      if (!in) throw SchemaError("request: cannot open " + request_file);
      std::stringstream ss;
      ss << in.rdbuf();
      req = parse_json_text(ss.str(), "request");
      if (!req.is_object()) throw SchemaError("request: expected a JSON object");
    }
    for (const auto& s : setters) s(req);
    return req;
  }
};

int dispatch(const std::string& name, const Json& req, Context& ctx) {
  if (name == "det") return cmd_det(req, ctx);
  if (name == "minor") return cmd_minor(req, ctx);
  if (name == "inverse") return cmd_inverse(req, ctx);
  if (name == "skewschur") return cmd_skewschur(req, ctx);
  if (name == "closedform") return cmd_closedform(req, ctx);
  if (name == "biorth") return cmd_biorth(req, ctx);
  if (name == "oracle") return cmd_oracle(req, ctx);
  if (name == "table1") return cmd_table1(req, ctx);
  if (name == "converge") return cmd_converge(req, ctx);
  if (name == "verify") return cmd_verify(req, ctx);
  throw SchemaError("subcommand: unknown \"" + name + "\"");
}

Format default_format(const std::string& name) {
  if (name == "table1") return Format::Markdown;
  if (name == "converge") return Format::Csv;
  return Format::Plain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Toeplitz determinants, minors, and skew Schur specializations"};
  app.require_subcommand(0, 1);

  std::string format;
  long jobs = 1;
  unsigned long long seed = 1;
  std::string top_request;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--jobs", jobs, "worker threads for verify grids")->check(CLI::Range(1L, 64L));
  app.add_option("--seed", seed, "seed for randomized verification profiles");
  app.add_option("--request", top_request, "JSON request with a \"subcommand\" field");

  struct Entry {
    FlagSet* set;
    std::string name;
    std::string mode;
  };
  std::vector<std::unique_ptr<FlagSet>> sets;
  std::vector<Entry> entries;
  auto make = [&](CLI::App* parent, const char* name, const char* desc, const char* cmd_name,
                  const char* mode) -> FlagSet& {
    CLI::App* sc = parent->add_subcommand(name, desc);
    sc->fallthrough();  // global flags stay valid after the subcommand name
    sets.push_back(std::make_unique<FlagSet>(sc));
    entries.push_back({sets.back().get(), cmd_name, mode});
    return *sets.back();
  };

  FlagSet& det = make(&app, "det", "Toeplitz determinant D_N(f)", "det", "");
  det.json_flag("--symbol", "symbol", "symbol JSON");
  det.int_flag("--N", "N", "matrix size");

  FlagSet& minor = make(&app, "minor", "Toeplitz minor determinant D_N^{lambda,mu}(f)", "minor",
                        "");
  minor.json_flag("--symbol", "symbol", "symbol JSON");
  minor.int_flag("--N", "N", "matrix size");
  minor.json_flag("--lambda", "lambda", "row shift partition");
  minor.json_flag("--mu", "mu", "column shift partition");

  FlagSet& inverse = make(&app, "inverse", "exact inverse of T_N(f)", "inverse", "");
  inverse.json_flag("--symbol", "symbol", "symbol JSON");
  inverse.int_flag("--N", "N", "matrix size");

  FlagSet& skews = make(&app, "skewschur", "skew Schur evaluation s_{outer/inner}", "skewschur",
                        "");
  skews.json_flag("--outer", "outer", "outer shape");
  skews.json_flag("--inner", "inner", "inner shape");
  skews.json_flag("--spec", "spec", "specialization JSON");
  skews.text_flag("--basis", "basis", "H or E");

  FlagSet& closedform = make(&app, "closedform", "evaluate one closed formula by id",
                             "closedform", "");
  closedform.text_flag("formula", "formula", "formula id");
  closedform.json_flag("--params", "params", "formula parameters JSON");
  closedform.bool_flag("--verify", "verify", "cross-check against the direct route");

  CLI::App* biorth = app.add_subcommand("biorth", "biorthogonal pairs and kernels");
  biorth->fallthrough();
  biorth->require_subcommand(0, 1);
  FlagSet& pair = make(biorth, "pair", "degree-j biorthogonal pair", "biorth", "pair");
  pair.json_flag("--symbol", "symbol", "symbol JSON");
  pair.int_flag("--j", "j", "degree");
  pair.bool_flag("--closed", "closed", "use the closed pair for theta symbols");
  FlagSet& kernel = make(biorth, "kernel", "reproducing kernel coefficients", "biorth", "kernel");
  kernel.json_flag("--symbol", "symbol", "symbol JSON");
  kernel.int_flag("--N", "N", "matrix size");
  kernel.bool_flag("--closed", "closed", "use the closed kernel for theta symbols");
  kernel.bool_flag("--verify-inverse", "verify_inverse", "compare against the exact inverse");
  sets.push_back(std::make_unique<FlagSet>(biorth));
  entries.push_back({sets.back().get(), "biorth", ""});

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force constant-term oracles");
  oracle->fallthrough();
  oracle->require_subcommand(0, 1);
  FlagSet& heine = make(oracle, "heine", "constant-term minor integral", "oracle", "heine");
  heine.json_flag("--symbol", "symbol", "symbol JSON");
  heine.json_flag("--lambda", "lambda", "row shift partition");
  heine.json_flag("--mu", "mu", "column shift partition");
  heine.int_flag("--N", "N", "matrix size");
  heine.bool_flag("--compare", "compare", "compare against the minor determinant");
  FlagSet& morris = make(oracle, "morris", "binomial-window integrand", "oracle", "morris");
  morris.int_flag("--gamma", "gamma", "singularity exponent gamma");
  morris.int_flag("--delta", "delta", "singularity exponent delta");
  morris.json_flag("--lambda", "lambda", "row shift partition");
  morris.json_flag("--mu", "mu", "column shift partition");
  morris.int_flag("--N", "N", "matrix size");
  morris.bool_flag("--compare", "compare", "compare against the minor determinant");
  sets.push_back(std::make_unique<FlagSet>(oracle));
  entries.push_back({sets.back().get(), "oracle", ""});

  FlagSet& table1 = make(&app, "table1", "minor ratio limits for the eight tabulated shapes",
                         "table1", "");
  table1.json_flag("--profile", "profile", "{\"plus\": [c_1, ...], \"minus\": [c_-1, ...]}");

  FlagSet& converge = make(&app, "converge", "exact minor ratio trajectory against its limit",
                           "converge", "");
  converge.json_flag("--symbol", "symbol", "symbol JSON");
  converge.json_flag("--lambda", "lambda", "row shift partition");
  converge.json_flag("--mu", "mu", "column shift partition");
  converge.int_flag("--N-max", "N_max", "last row of the table");

  FlagSet& verify = make(&app, "verify", "run identity grids", "verify", "");
  verify.text_flag("suite", "suite", "all, gessel, baxter, dr, biorth, oracle, closedforms");
  verify.bool_flag("--quick", "quick", "smaller grid budgets");
  verify.int_flag("--N", "N", "override the grid size cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  }

  Context ctx;
  ctx.jobs = jobs;
  ctx.seed = seed;
  ctx.out = &out;

  try {
    const Entry* chosen = nullptr;
    for (const Entry& e : entries)
      if (e.set->cmd->parsed()) {
        chosen = &e;
        break;
      }
    std::string name;
    Json req;
    if (chosen) {
      name = chosen->name;
      req = chosen->set->build();
      if (!chosen->mode.empty()) req["mode"] = chosen->mode;
    } else if (!top_request.empty()) {
      std::ifstream in(top_request);
      if (!in) throw SchemaError("request: cannot open " + top_request);
      std::stringstream ss;
      ss << in.rdbuf();
      req = parse_json_text(ss.str(), "request");
      if (!req.is_object()) throw SchemaError("request: expected a JSON object");
      name = req_string(req, "subcommand");
    } else {
      throw SchemaError("a subcommand is required (see --help)");
    }
    ctx.fmt = format.empty() ? default_format(name)
              : format == "json" ? Format::JsonOut
              : format == "csv"  ? Format::Csv
                                 : Format::Markdown;
    return dispatch(name, req, ctx);
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const CheckError& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toep
