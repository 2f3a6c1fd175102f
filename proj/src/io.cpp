#include "duniform/io.hpp"

#include <fstream>
#include <map>

namespace duniform {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::Schema, pointer + ": " + what);
}

VertexId parse_id(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) schema_error(pointer, "vertex id must be an integer");
  const auto id = j.get<std::int64_t>();
  if (id < 0) schema_error(pointer, "vertex id must be non-negative");
  return id;
}

VertexId parse_id_key(const std::string& key, const std::string& pointer) {
  try {
    std::size_t used = 0;
    const long long id = std::stoll(key, &used);
    if (used != key.size() || id < 0) schema_error(pointer, "bad vertex id '" + key + "'");
    return id;
  } catch (const std::logic_error&) {
    schema_error(pointer, "bad vertex id '" + key + "'");
  }
}

double parse_number(const json& j, const std::string& pointer) {
  if (!j.is_number()) schema_error(pointer, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema_error(pointer, "expected a finite number");
  return x;
}

const json& require_object(const json& doc, const char* key) {
  const std::string pointer = std::string("/") + key;
  if (!doc.contains(key)) schema_error(pointer, "missing");
  const json& j = doc.at(key);
  if (!j.is_object()) schema_error(pointer, "expected an object");
  return j;
}

std::string edge_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return std::to_string(a) + "-" + std::to_string(b);
}

std::string id_key(const AugmentedDisk& aug, int v) {
  return v == aug.apex() ? std::string("hat") : std::to_string(aug.id(v));
}

}  // namespace

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) schema_error("", "expected an object");
  static const std::vector<std::string> known{"vertices", "faces", "alpha", "eta", "mu", "f_init", "scenario", "solution"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) schema_error("/" + key, "unknown key");
  }

  RawMesh mesh;
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) schema_error("/vertices", "expected an array");
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    mesh.vertices.push_back(parse_id(doc["vertices"][i], "/vertices/" + std::to_string(i)));
  }
  if (!doc.contains("faces") || !doc["faces"].is_array()) schema_error("/faces", "expected an array");
  if (doc["faces"].empty()) schema_error("/faces", "no faces");
  for (std::size_t i = 0; i < doc["faces"].size(); ++i) {
    const std::string ptr = "/faces/" + std::to_string(i);
    const json& t = doc["faces"][i];
    if (!t.is_array() || t.size() != 3) schema_error(ptr, "expected three vertex ids");
    std::array<VertexId, 3> face{};
    for (int k = 0; k < 3; ++k) face[static_cast<std::size_t>(k)] = parse_id(t[static_cast<std::size_t>(k)], ptr + "/" + std::to_string(k));
    mesh.faces.push_back(face);
  }
  for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      const VertexId id = mesh.faces[i][static_cast<std::size_t>(k)];
      if (std::find(mesh.vertices.begin(), mesh.vertices.end(), id) == mesh.vertices.end()) {
        schema_error("/faces/" + std::to_string(i) + "/" + std::to_string(k), "unknown vertex " + std::to_string(id));
      }
    }
  }

  AugmentedDisk aug = augment(validate_disk(mesh));
  const auto& base = aug.base();
  const std::size_t n = base.num_vertices();

  const json& alpha = require_object(doc, "alpha");
  std::vector<double> alpha_disk(n, 0.0);
  std::vector<char> alpha_seen(n, 0);
  double alpha_hat = 0.0;
  bool hat_seen = false;
  for (const auto& [key, value] : alpha.items()) {
    const std::string ptr = "/alpha/" + key;
    if (key == "hat") {
      alpha_hat = parse_number(value, ptr);
      hat_seen = true;
      continue;
    }
    const VertexId id = parse_id_key(key, ptr);
    int v = -1;
    try {
      v = base.index_of(id);
    } catch (const Error&) {
      schema_error(ptr, "unknown vertex");
    }
    alpha_disk[static_cast<std::size_t>(v)] = parse_number(value, ptr);
    alpha_seen[static_cast<std::size_t>(v)] = 1;
  }
  if (!hat_seen) schema_error("/alpha/hat", "missing");
  for (std::size_t v = 0; v < n; ++v) {
    if (!alpha_seen[v]) schema_error("/alpha/" + std::to_string(base.id(static_cast<int>(v))), "missing");
  }

  const json& eta = require_object(doc, "eta");
  std::vector<double> eta_disk(base.num_edges(), 0.0);
  std::vector<char> eta_seen(base.num_edges(), 0);
  for (const auto& [key, value] : eta.items()) {
    const std::string ptr = "/eta/" + key;
    const auto dash = key.find('-');
    if (dash == std::string::npos) schema_error(ptr, "expected 'i-j'");
    const VertexId a = parse_id_key(key.substr(0, dash), ptr);
    const VertexId b = parse_id_key(key.substr(dash + 1), ptr);
    if (a >= b) schema_error(ptr, "edge keys list the smaller id first");
    int e = -1;
    try {
      e = base.edge_index(base.index_of(a), base.index_of(b));
    } catch (const Error&) {
    }
    if (e < 0) schema_error(ptr, "not an edge of the disk");
    eta_disk[static_cast<std::size_t>(e)] = parse_number(value, ptr);
    eta_seen[static_cast<std::size_t>(e)] = 1;
  }
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    if (!eta_seen[e]) {
      const auto& ed = base.edges()[e];
      schema_error("/eta/" + edge_key(base.id(ed[0]), base.id(ed[1])), "missing");
    }
  }

  const json& mu_obj = require_object(doc, "mu");
  std::vector<double> mu(n, 0.0);
  std::vector<char> mu_seen(n, 0);
  for (const auto& [key, value] : mu_obj.items()) {
    const std::string ptr = "/mu/" + key;
    const VertexId id = parse_id_key(key, ptr);
    int v = -1;
    try {
      v = base.index_of(id);
    } catch (const Error&) {
      schema_error(ptr, "unknown vertex");
    }
    if (!base.is_boundary_vertex(v)) schema_error(ptr, "mu given for a non-boundary vertex");
    mu[static_cast<std::size_t>(v)] = parse_number(value, ptr);
    mu_seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : base.boundary_cycle()) {
    if (!mu_seen[static_cast<std::size_t>(v)]) schema_error("/mu/" + std::to_string(base.id(v)), "missing");
  }

  ConformalStructure cs = augmented_structure(aug, alpha_disk, eta_disk, mu, alpha_hat);

  Eigen::VectorXd disk_f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  std::optional<double> hat_f;
  if (doc.contains("f_init")) {
    const json& fi = require_object(doc, "f_init");
    for (const auto& [key, value] : fi.items()) {
      const std::string ptr = "/f_init/" + key;
      if (key == "hat") {
        hat_f = parse_number(value, ptr);
        continue;
      }
      const VertexId id = parse_id_key(key, ptr);
      int v = -1;
      try {
        v = base.index_of(id);
      } catch (const Error&) {
        schema_error(ptr, "unknown vertex");
      }
      disk_f[v] = parse_number(value, ptr);
    }
  }
  Label f = default_initial_label(aug, disk_f);
  if (hat_f) f[aug.apex()] = *hat_f;

  std::optional<Scenario> scenario;
  if (doc.contains("scenario")) {
    if (!doc["scenario"].is_string()) schema_error("/scenario", "expected a string");
    try {
      scenario = parse_scenario(doc["scenario"].get<std::string>());
    } catch (const Error&) {
      schema_error("/scenario", "unknown scenario '" + doc["scenario"].get<std::string>() + "'");
    }
  }
  return Problem{std::move(aug), std::move(cs), std::move(f), scenario};
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Schema, "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, path.string() + ": " + e.what());
  }
  return parse_problem(doc);
}

json label_to_json(const AugmentedDisk& aug, const Eigen::VectorXd& values) {
  json out = json::object();
  for (Eigen::Index v = 0; v < values.size(); ++v) out[id_key(aug, static_cast<int>(v))] = values[v];
  return out;
}

json serialize_problem(const Problem& p, bool include_label) {
  const auto& base = p.aug.base();
  json doc;
  doc["vertices"] = json::array();
  for (VertexId id : base.ids()) doc["vertices"].push_back(id);
  doc["faces"] = json::array();
  for (const auto& t : base.faces()) doc["faces"].push_back({base.id(t[0]), base.id(t[1]), base.id(t[2])});

  json alpha = json::object();
  for (std::size_t v = 0; v < p.aug.num_vertices(); ++v) {
    alpha[id_key(p.aug, static_cast<int>(v))] = p.cs.alpha[static_cast<Eigen::Index>(v)];
  }
  doc["alpha"] = alpha;

  json eta = json::object();
  json mu = json::object();
  const auto edges = p.aug.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const double value = p.cs.eta[static_cast<Eigen::Index>(e)];
    if (edges[e].cls == SimplexClass::Augmented) {
      mu[std::to_string(base.id(edges[e].v[0]))] = value;
    } else {
      eta[edge_key(base.id(edges[e].v[0]), base.id(edges[e].v[1]))] = value;
    }
  }
  doc["eta"] = eta;
  doc["mu"] = mu;
  if (include_label) doc["f_init"] = label_to_json(p.aug, p.f);
  if (p.scenario) doc["scenario"] = std::string(to_string(*p.scenario));
  return doc;
}

json layout_to_json(const AugmentedDisk& aug, const PlaneLayout& layout, const std::vector<MPoint>& mpoints) {
  json out;
  out["augmented"] = layout.augmented;
  out["consistency_residual"] = layout.consistency_residual;
  out["max_edge_error"] = layout.max_edge_error;
  out["diameter"] = layout.diameter;
  json pos = json::object();
  json xi = json::object();
  for (std::size_t v = 0; v < layout.positions.size(); ++v) {
    const std::string key = id_key(aug, static_cast<int>(v));
    pos[key] = {layout.positions[v].x(), layout.positions[v].y()};
    if (v < mpoints.size()) {
      const auto& x = mpoints[v].xi();
      xi[key] = {x[0], x[1], x[2], x[3]};
    }
  }
  out["positions"] = pos;
  out["mpoints"] = xi;
  return out;
}

json boundary_report_to_json(const AugmentedDisk& aug, const BoundaryReport& r) {
  json out;
  out["scenario"] = std::string(to_string(r.scenario));
  out["max_residual"] = r.max_residual;
  out["passed"] = r.passed;
  json per = json::object();
  for (std::size_t i = 0; i < r.vertices.size(); ++i) per[id_key(aug, r.vertices[i])] = r.residuals[i];
  out["residuals"] = per;
  return out;
}

json newton_to_json(const NewtonResult& r) {
  json out;
  out["converged"] = r.converged;
  out["iterations"] = r.iterations;
  out["residual"] = r.residual;
  out["residual_history"] = r.residual_history;
  if (r.failure) {
    out["failure"] = std::string(to_string(*r.failure));
    out["message"] = r.message;
  }
  return out;
}

json rank_to_json(const Eigen::MatrixXd& m, const RankReport& r) {
  json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["rank"] = r.rank;
  out["cutoff"] = r.cutoff;
  out["singular_values"] = std::vector<double>(r.singular_values.data(), r.singular_values.data() + r.singular_values.size());
  return out;
}

}  // namespace duniform
