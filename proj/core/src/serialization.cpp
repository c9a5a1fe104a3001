#include "qpoisson/serialization.hpp"

#include <set>

namespace qpoisson {

namespace {

constexpr std::size_t kMaxDim = 16;

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_index(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound) fail(std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

std::size_t as_dim(const Json& j) {
  if (!j.is_number_integer()) fail("'dim' must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) > kMaxDim) fail("'dim' out of range");
  return static_cast<std::size_t>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::vector<std::string> labels_from_json(const Json& j, std::size_t dim) {
  const auto it = j.find("labels");
  if (it == j.end()) return {};
  std::vector<std::string> labels;
  for (const auto& l : as_array(*it, "'labels'")) {
    if (!l.is_string()) fail("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  if (labels.size() != dim) fail("label count does not match 'dim'");
  return labels;
}

// Reads [[i1..ik, value], ...] requiring strictly increasing indices when `strict` says so.
// Returns (index tuple, value) pairs.
std::vector<std::pair<MultiIndex, Rational>> read_entries(const Json& list, std::size_t dim, std::size_t arity,
                                                           const char* what) {
  std::vector<std::pair<MultiIndex, Rational>> out;
  std::set<MultiIndex> seen;
  for (const auto& e : as_array(list, what)) {
    if (!e.is_array() || e.size() != arity + 1) fail(std::string(what) + ": malformed entry " + e.dump());
    MultiIndex idx;
    for (std::size_t s = 0; s < arity; ++s) idx.push_back(as_index(e[s], dim, what));
    if (!seen.insert(idx).second) fail(std::string(what) + ": duplicate entry " + e.dump());
    out.emplace_back(std::move(idx), rational_from_json(e[arity]));
  }
  return out;
}

Json entry(const MultiIndex& idx, const Rational& v) {
  Json e = Json::array();
  for (auto i : idx) e.push_back(i);
  e.push_back(rational_to_json(v));
  return e;
}

Json lie_fields(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Json j;
  j["dim"] = n;
  j["labels"] = g.labels();
  Json br = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        if (!g.constant(i, k, m).is_zero()) br.push_back(entry({i, k, m}, g.constant(i, k, m)));
  j["bracket"] = br;
  return j;
}

Json bool_map(std::initializer_list<std::pair<const char*, bool>> xs) {
  Json j = Json::object();
  for (const auto& [k, v] : xs) j[k] = v;
  return j;
}

}  // namespace

Json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("rational must be a \"p/q\" string or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

Json tensor_to_json(const Tensor& t) {
  Json out = Json::array();
  for (std::size_t f = 0; f < t.size(); ++f)
    if (!t.flat(f).is_zero()) out.push_back(entry(t.multi_index(f), t.flat(f)));
  return out;
}

Tensor tensor_from_json(const Json& j, std::size_t dim, std::size_t degree) {
  Tensor t(dim, degree);
  for (auto& [idx, v] : read_entries(j, dim, degree, "tensor")) t.at(idx) = v;
  return t;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& b : s.basis()) {
    Json row = Json::array();
    for (const auto& x : b) row.push_back(rational_to_json(x));
    rows.push_back(row);
  }
  return rows;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  std::vector<Vec> rows;
  for (const auto& row : as_array(j, "subspace")) {
    if (!row.is_array() || row.size() != ambient) fail("subspace row has the wrong length");
    Vec v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    rows.push_back(std::move(v));
  }
  return Subspace::span(ambient, rows);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) fail("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail("matrix row has the wrong length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json bivector_to_json(const Tensor& r) {
  Json out = Json::array();
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t k = i + 1; k < r.dim(); ++k)
      if (!r.at({i, k}).is_zero()) out.push_back(entry({i, k}, r.at({i, k})));
  return out;
}

Tensor bivector_from_json(const Json& j, std::size_t dim) {
  Tensor r(dim, 2);
  std::vector<std::pair<MultiIndex, Rational>> lower;
  for (auto& [idx, v] : read_entries(j, dim, 2, "'r'")) {
    if (idx[0] == idx[1]) {
      if (!v.is_zero()) fail("r is not antisymmetric: nonzero diagonal entry");
      continue;
    }
    if (idx[0] < idx[1]) {
      r.at({idx[0], idx[1]}) = v;
      r.at({idx[1], idx[0]}) = -v;
    } else {
      lower.emplace_back(idx, v);
    }
  }
  for (const auto& [idx, v] : lower) {
    const Rational& partner = r.at({idx[1], idx[0]});
    if (partner.is_zero() && r.at(idx).is_zero()) {
      r.at(idx) = v;
      r.at({idx[1], idx[0]}) = -v;
    } else if (r.at(idx) != v) {
      fail("r is not antisymmetric at (" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + ")");
    }
  }
  return r.mark_antisymmetric();
}

Json lie_algebra_to_json(const LieAlgebra& g) { return lie_fields(g); }

LieAlgebra lie_algebra_from_json(const Json& j) {
  const std::size_t n = as_dim(field(j, "dim"));
  std::vector<StructureEntry> entries;
  for (auto& [idx, v] : read_entries(field(j, "bracket"), n, 3, "'bracket'")) {
    if (idx[0] >= idx[1]) fail("'bracket' entries must have i < j");
    entries.push_back({idx[0], idx[1], idx[2], v});
  }
  return LieAlgebra::from_entries(n, entries, labels_from_json(j, n));
}

Json quasi_bialgebra_to_json(const QuasiBialgebra& qb) {
  Json j = lie_fields(qb.algebra);
  const std::size_t n = qb.dim();
  const Tensor& d = qb.delta.components();
  Json delta = Json::array();
  Json phi = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!d.at({i, a, b}).is_zero()) delta.push_back(entry({i, a, b}, d.at({i, a, b})));
        if (i < a && !qb.phi.at({i, a, b}).is_zero()) phi.push_back(entry({i, a, b}, qb.phi.at({i, a, b})));
      }
  j["delta"] = delta;
  j["phi"] = phi;
  return j;
}

QuasiBialgebra quasi_bialgebra_from_json(const Json& j) {
  LieAlgebra g = lie_algebra_from_json(j);
  const std::size_t n = g.dim();
  Tensor d(n, 3);
  if (j.contains("delta")) {
    for (auto& [idx, v] : read_entries(j["delta"], n, 3, "'delta'")) {
      if (idx[1] >= idx[2]) fail("'delta' entries must have j < k");
      d.at(idx) = v;
      d.at({idx[0], idx[2], idx[1]}) = -v;
    }
  }
  Tensor phi(n, 3);
  if (j.contains("phi")) {
    for (auto& [idx, v] : read_entries(j["phi"], n, 3, "'phi'")) {
      if (!(idx[0] < idx[1] && idx[1] < idx[2])) fail("'phi' entries must have i < j < k");
      phi.at(idx) = v;
    }
  }
  return QuasiBialgebra(std::move(g), Cocycle(std::move(d)), alt(phi));
}

Json double_to_json(const DoubleAlgebra& d) {
  Json j = lie_fields(d.algebra());
  j["q_matrix"] = matrix_to_json(d.q_matrix());
  j["source"] = quasi_bialgebra_to_json(d.source());
  return j;
}

DoubleAlgebra double_from_json(const Json& j) {
  LieAlgebra a = lie_algebra_from_json(j);
  QuasiBialgebra src = quasi_bialgebra_from_json(field(j, "source"));
  Matrix q = matrix_from_json(field(j, "q_matrix"), a.dim(), a.dim());
  try {
    return DoubleAlgebra(std::move(src), std::move(a), std::move(q));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json hom_datum_to_json(const HomDatum& d, const Json& algebra_ref) {
  Json j;
  if (!d.label.empty()) j["label"] = d.label;
  j["algebra"] = algebra_ref;
  j["h"] = subspace_to_json(d.h);
  j["r"] = bivector_to_json(d.r);
  return j;
}

HomDatum hom_datum_from_json(const Json& j, const QuasiBialgebra& algebra) {
  const std::size_t n = algebra.dim();
  if (j.contains("algebra") && j["algebra"].is_object()) {
    if (!(quasi_bialgebra_from_json(j["algebra"]) == algebra)) fail("inline 'algebra' differs from the supplied algebra");
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail("'label' must be a string");
    label = j["label"].get<std::string>();
  }
  return HomDatum(algebra, subspace_from_json(field(j, "h"), n), bivector_from_json(field(j, "r"), n), label);
}

Json polynomial_system_to_json(const PolynomialSystem& sys) {
  Json j;
  const auto names = sys.unknown_names();
  j["dim"] = sys.dim;
  j["unknowns"] = names;
  Json eqs = Json::array();
  for (const auto& eq : sys.equations) {
    Json e;
    e["component"] = {eq.component[0], eq.component[1], eq.component[2]};
    Json monos = Json::array();
    for (const auto& m : eq.monomials) {
      Json vars = Json::array();
      for (auto v : m.vars) vars.push_back(names[v]);
      monos.push_back({{"vars", vars}, {"coef", rational_to_json(m.coef)}});
    }
    e["monomials"] = monos;
    eqs.push_back(e);
  }
  j["equations"] = eqs;
  return j;
}

PolynomialSystem polynomial_system_from_json(const Json& j) {
  PolynomialSystem sys;
  sys.dim = as_dim(field(j, "dim"));
  for (std::size_t i = 0; i < sys.dim; ++i)
    for (std::size_t k = i + 1; k < sys.dim; ++k) sys.unknowns.push_back({i, k});
  const auto names = sys.unknown_names();
  const Json& unknowns = as_array(field(j, "unknowns"), "'unknowns'");
  if (unknowns != Json(names)) fail("'unknowns' must list r_i_j for i < j in order");
  for (const auto& e : as_array(field(j, "equations"), "'equations'")) {
    Polynomial p;
    const Json& comp = field(e, "component");
    if (!comp.is_array() || comp.size() != 3) fail("'component' must have three indices");
    for (std::size_t s = 0; s < 3; ++s) p.component[s] = as_index(comp[s], sys.dim, "'component'");
    for (const auto& m : as_array(field(e, "monomials"), "'monomials'")) {
      Monomial mono;
      for (const auto& v : as_array(field(m, "vars"), "'vars'")) {
        if (!v.is_string()) fail("monomial variables must be strings");
        const auto it = std::find(names.begin(), names.end(), v.get<std::string>());
        if (it == names.end()) fail("unknown variable " + v.dump());
        mono.vars.push_back(static_cast<std::size_t>(it - names.begin()));
      }
      mono.coef = rational_from_json(field(m, "coef"));
      p.monomials.push_back(std::move(mono));
    }
    sys.equations.push_back(std::move(p));
  }
  return sys;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j = quasi_bialgebra_to_json(e.qb);
  j["name"] = e.name;
  Json data = Json::array();
  for (const auto& d : e.data) data.push_back(hom_datum_to_json(d, e.name));
  j["data"] = data;
  Json subs = Json::array();
  for (const auto& s : e.subalgebras) subs.push_back(subspace_to_json(s));
  j["subalgebras"] = subs;
  if (e.quadratic) j["quadratic_form"] = matrix_to_json(e.quadratic->form());
  if (!e.convention.empty()) j["convention"] = e.convention;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["pass"] = v.pass;
  if (!v.pass) {
    j["witness"] = v.witness;
    j["detail"] = v.detail;
    if (v.residual) j["residual"] = tensor_to_json(*v.residual);
  }
  return j;
}

Json axiom_report_to_json(const AxiomReport& r) {
  return {{"jacobi", verdict_to_json(r.jacobi)},
          {"cocycle", verdict_to_json(r.cocycle)},
          {"quasi_cojacobi", verdict_to_json(r.quasi_cojacobi)},
          {"pentagon", verdict_to_json(r.pentagon)},
          {"pass", r.pass()}};
}

Json double_axiom_report_to_json(const DoubleAxiomReport& r) {
  return {{"jacobi", verdict_to_json(r.jacobi)}, {"q_invariance", verdict_to_json(r.invariance)}, {"pass", r.pass()}};
}

Json classification_report_to_json(const ClassificationReport& r) {
  Json j = bool_map({{"h_subalgebra", r.h_subalgebra},
                     {"stable", r.stable},
                     {"obstruction_zero", r.obstruction_zero},
                     {"lagrangian", r.lagrangian},
                     {"meets_g_in_h", r.meets_g_in_h},
                     {"subalgebra", r.subalgebra},
                     {"verdict", r.verdict}});
  Json w = Json::object();
  if (!r.h_closure.pass) w["h_closure"] = verdict_to_json(r.h_closure);
  if (!r.subalgebra_check.pass) w["subalgebra"] = verdict_to_json(r.subalgebra_check);
  if (!r.obstruction_zero) w["obstruction"] = tensor_to_json(r.obstruction);
  Json res = Json::array();
  for (const auto& t : r.residuals) res.push_back(tensor_to_json(t));
  if (!r.stable) w["stability_residuals"] = res;
  j["witnesses"] = w;
  j["dirac_subspace"] = subspace_to_json(r.dirac);
  return j;
}

Json twist_report_to_json(const TwistReport& r) {
  Json j = bool_map({{"bracket_preserving", r.bracket_preserving},
                     {"form_preserving", r.form_preserving},
                     {"fixes_g", r.fixes_g},
                     {"pass", r.pass()}});
  j["r"] = bivector_to_json(r.r);
  j["f_r"] = matrix_to_json(r.f);
  if (!r.bracket_check.pass) j["bracket_witness"] = verdict_to_json(r.bracket_check);
  return j;
}

Json composition_report_to_json(const CompositionReport& r) {
  Json j = bool_map({{"delta_additive", r.delta_additive},
                     {"phi_additive", r.phi_additive},
                     {"matrix_law", r.matrix_law}});
  j["phi_discrepancy"] = tensor_to_json(r.phi_discrepancy);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qpoisson
