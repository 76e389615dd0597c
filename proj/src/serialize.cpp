#include "trm/serialize.hpp"

#include <fstream>
#include <sstream>

namespace trm {

using nlohmann::json;

namespace {

constexpr const char* kComplexFormat = "trm-complex/1";

const char* mode_name(ReductionMode m) { return m == ReductionMode::Canonical ? "canonical" : "generic"; }

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_prime()) return json{{"kind", "prime"}, {"p", f.characteristic()}};
  return json{{"kind", "rational"}};
}

Field field_from_json(const json& j) {
  auto kind = require<std::string>(j, "kind");
  if (kind == "rational") return Field::rationals();
  if (kind == "prime") {
    try {
      return Field::prime(require<std::uint64_t>(j, "p"));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("unknown field kind '" + kind + "'");
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(s.to_string());
  return arr;
}

Vector vector_from_json(const Field& f, const json& j) {
  if (!j.is_array()) throw FormatError("coordinate vector must be an array");
  Vector v;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError("scalars are stored as strings");
    try {
      v.push_back(f.parse(e.get<std::string>()));
    } catch (const std::exception& ex) {
      throw FormatError(std::string("bad scalar: ") + ex.what());
    }
  }
  return v;
}

json algebra_to_json(const GradedAlgebra& a) {
  json tables = json::array();
  for (int d1 = 0; d1 <= a.cutoff(); ++d1) {
    for (int d2 = d1; d1 + d2 <= a.cutoff(); ++d2) {
      json block = json::array();
      for (const auto& v : a.tables()[static_cast<std::size_t>(d1)][static_cast<std::size_t>(d2)]) {
        block.push_back(vector_to_json(v));
      }
      tables.push_back(json{{"d1", d1}, {"d2", d2}, {"products", block}});
    }
  }
  json labels = json::array();
  for (int d = 0; d <= a.cutoff(); ++d) labels.push_back(a.labels(d));
  return json{{"field", field_to_json(a.field())}, {"cutoff", a.cutoff()}, {"labels", labels}, {"tables", tables}};
}

AlgebraPtr algebra_from_json(const json& j) {
  Field f = field_from_json(require<json>(j, "field"));
  const int cutoff = require<int>(j, "cutoff");
  if (cutoff < 0) throw FormatError("negative cutoff");
  auto labels = require<std::vector<std::vector<std::string>>>(j, "labels");
  GradedAlgebra::Tables tables(static_cast<std::size_t>(cutoff) + 1,
                               std::vector<std::vector<Vector>>(static_cast<std::size_t>(cutoff) + 1));
  for (const auto& t : require<json>(j, "tables")) {
    const int d1 = require<int>(t, "d1");
    const int d2 = require<int>(t, "d2");
    if (d1 < 0 || d2 < d1 || d1 + d2 > cutoff) throw FormatError("product block outside the cutoff");
    auto& block = tables[static_cast<std::size_t>(d1)][static_cast<std::size_t>(d2)];
    for (const auto& v : require<json>(t, "products")) block.push_back(vector_from_json(f, v));
  }
  try {
    return GradedAlgebra::from_tables(f, cutoff, std::move(labels), std::move(tables));
  } catch (const DimensionError& e) {
    throw FormatError(e.what());
  }
}

const AlgebraPtr& AlgebraReference::algebra() const {
  switch (stage) {
    case 0:
      return reduction.ring;
    case 1:
      return reduction.middle();
    default:
      return reduction.reduced();
  }
}

json AlgebraReference::to_json() const {
  return json{{"graph", reduction.graph.to_json()},
              {"field", field_to_json(reduction.ring->field())},
              {"forms", mode_name(reduction.mode)},
              {"seed", reduction.seed},
              {"l1", vector_to_json(reduction.l1)},
              {"l2", vector_to_json(reduction.l2)},
              {"stage", stage},
              {"degree_bound", reduction.degree_bound}};
}

AlgebraReference AlgebraReference::from_json(const json& j) {
  Graph g = Graph::from_json(require<json>(j, "graph"));
  Field f = field_from_json(require<json>(j, "field"));
  auto forms = require<std::string>(j, "forms");
  if (forms != "canonical" && forms != "generic") throw FormatError("unknown forms '" + forms + "'");
  const int stage = require<int>(j, "stage");
  if (stage < 0 || stage > 2) throw FormatError("stage must be 0, 1 or 2");
  const int bound = require<int>(j, "degree_bound");
  Vector l1 = vector_from_json(f, require<json>(j, "l1"));
  Vector l2 = vector_from_json(f, require<json>(j, "l2"));
  GraphReduction r = reduce_by_forms(g, l1, l2, bound);
  r.mode = forms == "canonical" ? ReductionMode::Canonical : ReductionMode::Generic;
  r.seed = require<std::uint64_t>(j, "seed");
  return AlgebraReference{std::move(r), stage};
}

AlgebraReference AlgebraReference::with_degree_bound(int degree_bound) const {
  GraphReduction r = reduce_by_forms(reduction.graph, reduction.l1, reduction.l2, degree_bound);
  r.mode = reduction.mode;
  r.seed = reduction.seed;
  return AlgebraReference{std::move(r), stage};
}

json complex_to_json(const FreeComplexWindow& w, const std::optional<AlgebraReference>& ref) {
  json alg;
  if (ref) {
    if (ref->algebra() != w.algebra()) throw std::invalid_argument("reference does not describe the window's algebra");
    alg = json{{"reference", ref->to_json()}};
  } else {
    alg = json{{"inline", algebra_to_json(*w.algebra())}};
  }
  json ds = json::array();
  for (int i = w.lo(); i <= w.hi(); ++i) {
    const GradedMatrix& m = w.d(i);
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(vector_to_json(m.entry(r, c)));
      rows.push_back(row);
    }
    ds.push_back(json{{"index", i}, {"degree", m.degree()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}});
  }
  json out{{"format", kComplexFormat},
           {"field", field_to_json(w.algebra()->field())},
           {"algebra", alg},
           {"lo", w.lo()},
           {"twist", w.twist_base()},
           {"betti", w.betti_numbers()},
           {"differentials", ds}};
  if (w.periodicity()) {
    out["periodicity"] = json{{"period", w.periodicity()->period}, {"verified", w.periodicity()->verified}};
  }
  return out;
}

ComplexFile complex_from_json(const json& j) {
  if (require<std::string>(j, "format") != kComplexFormat) throw FormatError("unsupported complex format");
  Field f = field_from_json(require<json>(j, "field"));
  const json alg = require<json>(j, "algebra");
  std::optional<AlgebraReference> ref;
  AlgebraPtr algebra;
  try {
    if (alg.contains("reference")) {
      ref = AlgebraReference::from_json(alg.at("reference"));
      algebra = ref->algebra();
    } else if (alg.contains("inline")) {
      algebra = algebra_from_json(alg.at("inline"));
    } else {
      throw FormatError("algebra needs a 'reference' or an 'inline' description");
    }
  } catch (const GraphError& e) {
    throw FormatError(std::string("bad graph: ") + e.what());
  }
  if (!(algebra->field() == f)) throw FormatError("complex field differs from the algebra field");
  const int lo = require<int>(j, "lo");
  const int twist = require<int>(j, "twist");
  std::vector<GradedMatrix> ds;
  int expected = lo;
  for (const auto& d : require<json>(j, "differentials")) {
    if (require<int>(d, "index") != expected++) throw FormatError("differentials must be listed by consecutive index");
    const int degree = require<int>(d, "degree");
    const auto rows = require<std::size_t>(d, "rows");
    const auto cols = require<std::size_t>(d, "cols");
    const json entries = require<json>(d, "entries");
    if (degree < 0 || degree > algebra->cutoff()) throw FormatError("differential degree outside the algebra");
    if (!entries.is_array() || entries.size() != rows) throw FormatError("entry rows do not match 'rows'");
    GradedMatrix m(algebra, rows, cols, degree);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!entries[r].is_array() || entries[r].size() != cols) throw FormatError("entry columns do not match 'cols'");
      for (std::size_t c = 0; c < cols; ++c) {
        Vector v = vector_from_json(f, entries[r][c]);
        if (v.size() != algebra->dim(degree)) throw FormatError("entry has the wrong number of coordinates");
        m.set(r, c, std::move(v));
      }
    }
    ds.push_back(std::move(m));
  }
  std::optional<Periodicity> per;
  if (j.contains("periodicity")) {
    per = Periodicity{require<std::size_t>(j.at("periodicity"), "period"), require<bool>(j.at("periodicity"), "verified")};
  }
  try {
    FreeComplexWindow w(algebra, lo, std::move(ds), twist, per);
    if (j.contains("betti") && require<std::vector<std::size_t>>(j, "betti") != w.betti_numbers()) {
      throw FormatError("betti list does not match the matrices");
    }
    return ComplexFile{ref, std::move(w)};
  } catch (const DimensionError& e) {
    throw FormatError(e.what());
  }
}

FreeComplexWindow rebase_window(const FreeComplexWindow& w, const AlgebraPtr& target) {
  const auto& src = w.algebra();
  for (int d = 0; d <= 1; ++d) {
    if (src->dim(d) != target->dim(d) || src->labels(d) != target->labels(d)) {
      throw DimensionError("rebase_window: algebras differ in low degrees");
    }
  }
  std::vector<GradedMatrix> ds;
  for (const auto& m : w.differentials()) {
    GradedMatrix n(target, m.rows(), m.cols(), m.degree());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) n.set(r, c, m.entry(r, c));
    }
    ds.push_back(std::move(n));
  }
  return FreeComplexWindow(target, w.lo(), std::move(ds), w.twist_base(), w.periodicity());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace trm
