#include "defcoh/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "defcoh/errors.hpp"

namespace defcoh {

namespace {

using json = nlohmann::json;

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational literal at " + where);
}

RationalMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError(where + ": row " + std::to_string(i) + " needs " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = parse_rational(j[i][k], where);
  }
  return m;
}

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

StructureTensor parse_structure(const json& j, int dim) {
  StructureTensor t(dim);
  if (!j.is_array()) throw ParseError("structure: expected an array of (i, j, k, value) entries");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw ParseError("structure: entries are (i, j, k, value)");
    const int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
    if (i < 0 || jj < 0 || k < 0 || i >= dim || jj >= dim || k >= dim)
      throw ValidationError("structure index out of range at (" + std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k) + ")");
    if (i >= jj)
      throw ValidationError("skewness at (" + std::to_string(i) + "," + std::to_string(jj) + "): triples require i < j");
    const Rational v = parse_rational(e[3], "structure");
    t.at(i, jj, k) = v;
    t.at(jj, i, k) = -v;
  }
  return t;
}

json structure_to_json(const StructureTensor& t) {
  json out = json::array();
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i + 1; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k)
        if (!t.at(i, j, k).is_zero()) out.push_back(json::array({i, j, k, t.at(i, j, k).str()}));
  return out;
}

LieAlgebra validated_lie(const StructureTensor& t, std::vector<std::string> names) {
  const auto report = jacobi_defect(t);
  if (!report.is_lie) {
    const int n = t.dim();
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k, ++idx)
          for (const auto& e : report.defects[idx])
            if (!e.is_zero())
              throw ValidationError("jacobi defect at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
  }
  return LieAlgebra(t, std::move(names));
}

LieAlgebra parse_lie_payload(const json& j) {
  if (!j.contains("dim")) throw ParseError("lie_algebra: missing dim");
  const int dim = j.at("dim").get<int>();
  if (dim < 0) throw ValidationError("lie_algebra: negative dimension");
  if (dim > ambient_dim_cap()) throw ValidationError("ambient dimension exceeds cap (see DEFCOH_MAX_DIM)");
  StructureTensor t = parse_structure(j.value("structure", json::array()), dim);
  std::vector<std::string> names;
  if (j.contains("basis_names")) names = j.at("basis_names").get<std::vector<std::string>>();
  return validated_lie(t, std::move(names));
}

Representation parse_rep_payload(const json& j) {
  LieAlgebra algebra = parse_lie_payload(j.at("algebra"));
  const int m = j.at("dim").get<int>();
  if (m < 0) throw ValidationError("representation: negative dimension");
  if (m > ambient_dim_cap()) throw ValidationError("ambient dimension exceeds cap (see DEFCOH_MAX_DIM)");
  const auto& act = j.at("action");
  if (!act.is_array() || act.size() != static_cast<std::size_t>(algebra.dim()))
    throw ParseError("representation: need one action matrix per generator");
  std::vector<RationalMatrix> action;
  for (std::size_t i = 0; i < act.size(); ++i)
    action.push_back(parse_matrix(act[i], static_cast<std::size_t>(m), static_cast<std::size_t>(m), "action[" + std::to_string(i) + "]"));
  // Locate the first flatness violation before handing to the constructor.
  for (int i = 0; i < algebra.dim(); ++i)
    for (int k = i + 1; k < algebra.dim(); ++k) {
      RationalMatrix expr = action[static_cast<std::size_t>(i)] * action[static_cast<std::size_t>(k)] -
                            action[static_cast<std::size_t>(k)] * action[static_cast<std::size_t>(i)];
      const auto br = algebra.bracket(i, k);
      for (int s = 0; s < algebra.dim(); ++s)
        if (!br[static_cast<std::size_t>(s)].is_zero()) expr -= br[static_cast<std::size_t>(s)] * action[static_cast<std::size_t>(s)];
      if (!expr.is_zero()) throw ValidationError("flatness at (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
  return Representation(std::move(algebra), std::move(action));
}

json lie_to_json(const LieAlgebra& lie) {
  json j;
  j["dim"] = lie.dim();
  j["structure"] = structure_to_json(lie.structure());
  if (!lie.basis_names().empty()) j["basis_names"] = lie.basis_names();
  return j;
}

json rep_to_json(const Representation& rep) {
  json j;
  j["algebra"] = lie_to_json(rep.algebra());
  j["dim"] = rep.dim();
  json act = json::array();
  for (int i = 0; i < rep.algebra().dim(); ++i) act.push_back(matrix_to_json(rep.action(i)));
  j["action"] = std::move(act);
  return j;
}

}  // namespace

std::string kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::LieAlgebra:
      return "lie_algebra";
    case InstanceKind::Representation:
      return "representation";
    case InstanceKind::VBAlgebra:
      return "vb_algebra";
    case InstanceKind::LAVectorSpace:
      return "la_vector_space";
  }
  return "unknown";
}

int ambient_dim_cap() {
  if (const char* env = std::getenv("DEFCOH_MAX_DIM")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return 6;
}

Instance parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance file is not valid JSON: ") + e.what());
  }
  try {
    if (!j.contains("kind")) throw ParseError("missing kind");
    const std::string kind = j.at("kind").get<std::string>();
    Instance inst;
    inst.name = j.value("name", std::string("unnamed"));
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();

    if (kind == "lie_algebra") {
      inst.kind = InstanceKind::LieAlgebra;
      inst.lie = parse_lie_payload(j);
    } else if (kind == "representation") {
      inst.kind = InstanceKind::Representation;
      inst.rep = parse_rep_payload(j);
    } else if (kind == "vb_algebra") {
      inst.kind = InstanceKind::VBAlgebra;
      json rj = j;
      rj["dim"] = j.at("core_dim");
      Representation theta = parse_rep_payload(rj);
      if (theta.algebra().dim() + theta.dim() > ambient_dim_cap())
        throw ValidationError("ambient dimension exceeds cap (see DEFCOH_MAX_DIM)");
      inst.vb = VBAlgebra(std::move(theta));
    } else if (kind == "la_vector_space") {
      inst.kind = InstanceKind::LAVectorSpace;
      const int m = j.at("core_dim").get<int>();
      const int p = j.at("side_dim").get<int>();
      if (m < 0 || p < 0) throw ValidationError("la_vector_space: negative dimension");
      if (m > ambient_dim_cap() || p > ambient_dim_cap()) throw ValidationError("ambient dimension exceeds cap (see DEFCOH_MAX_DIM)");
      inst.la = LAVectorSpace(m, p, parse_matrix(j.at("partial"), static_cast<std::size_t>(p), static_cast<std::size_t>(m), "partial"));
    } else {
      throw ParseError("unknown kind '" + kind + "'");
    }
    return inst;
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance file is malformed: ") + e.what());
  }
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

std::string serialize(const Instance& instance) {
  json j;
  j["kind"] = kind_name(instance.kind);
  j["name"] = instance.name;
  if (instance.seed) j["seed"] = *instance.seed;
  switch (instance.kind) {
    case InstanceKind::LieAlgebra: {
      const json lie = lie_to_json(*instance.lie);
      j.update(lie);
      break;
    }
    case InstanceKind::Representation:
      j.update(rep_to_json(*instance.rep));
      break;
    case InstanceKind::VBAlgebra: {
      json rj = rep_to_json(instance.vb->theta());
      rj["core_dim"] = rj["dim"];
      rj.erase("dim");
      j.update(rj);
      break;
    }
    case InstanceKind::LAVectorSpace:
      j["core_dim"] = instance.la->core_dim;
      j["side_dim"] = instance.la->side_dim;
      j["partial"] = matrix_to_json(instance.la->partial);
      break;
  }
  return j.dump(2) + "\n";
}

Instance make_instance(LieAlgebra lie, std::string name, std::optional<std::uint64_t> seed) {
  Instance inst;
  inst.kind = InstanceKind::LieAlgebra;
  inst.name = std::move(name);
  inst.seed = seed;
  inst.lie = std::move(lie);
  return inst;
}

Instance make_instance(Representation rep, std::string name, std::optional<std::uint64_t> seed) {
  Instance inst;
  inst.kind = InstanceKind::Representation;
  inst.name = std::move(name);
  inst.seed = seed;
  inst.rep = std::move(rep);
  return inst;
}

Instance make_instance(VBAlgebra vb, std::string name, std::optional<std::uint64_t> seed) {
  Instance inst;
  inst.kind = InstanceKind::VBAlgebra;
  inst.name = std::move(name);
  inst.seed = seed;
  inst.vb = std::move(vb);
  return inst;
}

Instance make_instance(LAVectorSpace la, std::string name, std::optional<std::uint64_t> seed) {
  Instance inst;
  inst.kind = InstanceKind::LAVectorSpace;
  inst.name = std::move(name);
  inst.seed = seed;
  inst.la = std::move(la);
  return inst;
}

}  // namespace defcoh
