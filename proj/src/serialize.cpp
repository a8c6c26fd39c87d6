#include "torext/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "torext/errors.hpp"

namespace torext {

json to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw ParseError(field + ": expected an integer");
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

namespace {

IntVector vector_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of integers");
  IntVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = integer_from_json(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

int int_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw ParseError(field + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(field + ": out of range");
  return static_cast<int>(v);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + (where.empty() ? "" : ".") + key + ": missing");
  return *it;
}

int component_key(const std::string& key, const std::string& field) {
  std::size_t used = 0;
  int j = -1;
  try {
    j = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw ParseError(field + ": component key '" + key + "' is not an integer");
  return j;
}

}  // namespace

IntMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError(field + ": expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) rows.push_back(vector_from_json(j[r], field + "[" + std::to_string(r) + "]"));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].size() != cols) throw ParseError(field + "[" + std::to_string(r) + "]: ragged row");
  return IntMatrix::from_rows(cols, rows);
}

json to_json(const SubsurfaceConfig& config) {
  json comps = json::array();
  for (const auto& c : config.components) comps.push_back({{"genus", c.genus}, {"boundary_count", c.boundary_count}});
  return {{"q_genus", config.q_genus}, {"components", comps}};
}

SubsurfaceConfig config_from_json(const json& j) {
  SubsurfaceConfig config;
  config.q_genus = int_from_json(require(j, "q_genus", ""), "q_genus");
  const json& comps = require(j, "components", "");
  if (!comps.is_array()) throw ParseError("components: expected an array");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::string where = "components[" + std::to_string(k) + "]";
    ComplementComponent c;
    c.genus = int_from_json(require(comps[k], "genus", where), where + ".genus");
    c.boundary_count = int_from_json(require(comps[k], "boundary_count", where), where + ".boundary_count");
    config.components.push_back(c);
  }
  return config;
}

json to_json(const TwistWord& word) {
  json factors = json::array();
  for (const auto& f : word.factors) {
    json locus;
    switch (f.locus.kind) {
      case Locus::Kind::InQ: locus = "Q"; break;
      case Locus::Kind::InComplement: locus = {{"P", f.locus.component}}; break;
      case Locus::Kind::Ambient: locus = "S"; break;
    }
    factors.push_back({{"class", to_json(f.clazz.coords())}, {"exponent", to_json(f.exponent)}, {"locus", locus}});
  }
  return {{"factors", factors}};
}

TwistWord word_from_json(const json& j) {
  const json& factors = require(j, "factors", "");
  if (!factors.is_array()) throw ParseError("factors: expected an array");
  TwistWord word;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::string where = "factors[" + std::to_string(k) + "]";
    TwistFactor f;
    f.clazz = H1Class(vector_from_json(require(factors[k], "class", where), where + ".class"));
    f.exponent = integer_from_json(require(factors[k], "exponent", where), where + ".exponent");
    const json& locus = require(factors[k], "locus", where);
    if (locus == "Q") {
      f.locus = Locus::q();
    } else if (locus == "S") {
      f.locus = Locus::ambient();
    } else if (locus.is_object() && locus.size() == 1 && locus.contains("P")) {
      f.locus = Locus::complement(int_from_json(locus["P"], where + ".locus.P"));
    } else {
      throw ParseError(where + ".locus: expected \"Q\", \"S\" or {\"P\": j}");
    }
    word.factors.push_back(std::move(f));
  }
  return word;
}

json to_json(const DifferenceMap& delta) {
  json ranges = json::object();
  for (std::size_t j = 0; j < delta.blocks().size(); ++j) {
    const auto& b = delta.blocks()[j];
    ranges[std::to_string(j)] = {b.offset, b.offset + b.size};
  }
  return {{"matrix", to_json(delta.matrix())}, {"block_ranges", ranges}};
}

DifferenceMap delta_from_json(const HomologyModel& model, const json& j) {
  if (!j.is_object()) throw ParseError("delta: expected an object");
  const std::size_t k = model.reduced_rank();
  if (j.contains("matrix")) {
    IntMatrix m = matrix_from_json(j["matrix"], "matrix");
    if (k == 0 && m.rows() == 0) return DifferenceMap::zero(model);
    if (m.rows() != k || m.cols() != k)
      throw DimensionError("matrix: expected " + std::to_string(k) + "x" + std::to_string(k));
    return DifferenceMap(model, std::move(m));
  }
  const json& blocks = require(j, "blocks", "");
  if (!blocks.is_object()) throw ParseError("blocks: expected an object keyed by component index");
  IntMatrix full(k, k);
  for (const auto& [key, value] : blocks.items()) {
    const std::string field = "blocks." + key;
    const int comp = component_key(key, "blocks");
    if (comp < 0 || comp >= model.component_count())
      throw DimensionError(field + ": component " + key + " does not exist");
    const BlockRange range = model.block(comp);
    const IntMatrix m = matrix_from_json(value, field);
    if (range.size == 0 && m.rows() == 0) continue;
    if (m.rows() != range.size || m.cols() != range.size)
      throw DimensionError(field + ": expected " + std::to_string(range.size) + "x" + std::to_string(range.size));
    // Presentation rows are inputs o_i, so they become columns of the map.
    for (std::size_t i = 0; i < range.size; ++i)
      for (std::size_t c = 0; c < range.size; ++c) full(range.offset + c, range.offset + i) = m(i, c);
  }
  return DifferenceMap(model, std::move(full));
}

json to_json(const DiagonalMap& d) {
  json out = json::array();
  for (const auto& e : d.exponents) out.push_back(to_json(e));
  return {{"exponents", out}};
}

json to_json(const GroupRanks& ranks) {
  return {{"rank_K0", ranks.rank_K0}, {"rank_H1bar", ranks.rank_H1bar}, {"rank_Dc", ranks.rank_Dc}};
}

json to_json(const AnalysisReport& report) {
  json matrices = json::object();
  for (std::size_t j = 0; j < report.component_matrices.size(); ++j)
    matrices[std::to_string(j)] = to_json(report.component_matrices[j]);
  return {
      {"weakly_torelli", report.weakly_torelli},
      {"delta", report.delta ? to_json(*report.delta) : json(nullptr)},
      {"symmetric", report.symmetric},
      {"completely_reducible", report.completely_reducible},
      {"extension_by_identity_torelli", report.extension_by_identity_torelli},
      {"extendable_to_torelli", report.extendable_to_torelli},
      {"multitwist_correctable", report.multitwist_correctable ? to_json(*report.multitwist_correctable) : json(nullptr)},
      {"component_matrices", matrices},
      {"warnings", report.warnings},
  };
}

std::string to_text(const AnalysisReport& report) {
  std::ostringstream os;
  auto flag = [&](const char* name, bool v) { os << name << ": " << (v ? "true" : "false") << '\n'; };
  flag("weakly_torelli", report.weakly_torelli);
  flag("symmetric", report.symmetric);
  flag("completely_reducible", report.completely_reducible);
  flag("extension_by_identity_torelli", report.extension_by_identity_torelli);
  flag("extendable_to_torelli", report.extendable_to_torelli);
  os << "multitwist_correctable: ";
  if (report.multitwist_correctable) {
    IntVector e(report.multitwist_correctable->exponents);
    os << e << '\n';
  } else {
    os << "none\n";
  }
  if (report.delta) os << "delta: " << report.delta->matrix() << '\n';
  for (std::size_t j = 0; j < report.component_matrices.size(); ++j)
    os << "component " << j << ": " << report.component_matrices[j] << '\n';
  for (const auto& w : report.warnings) os << "warning: " << w << '\n';
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace torext
