#include "arith/formats.hpp"

#include <nlohmann/json.hpp>

namespace arith {

using nlohmann::json;

namespace {

json qmat_to_json(const QMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMat qmat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
  size_t rows = j.size(), cols = j[0].size();
  QMat m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw input_error("ragged matrix rows");
    for (size_t k = 0; k < cols; ++k) {
      const auto& cell = j[i][k];
      if (cell.is_number_integer())
        m(i, k) = Rat(cell.get<long>());
      else if (cell.is_string())
        m(i, k) = rat_from_string(cell.get<std::string>());
      else
        throw input_error("matrix entries must be integers or \"p/q\" strings");
    }
  }
  return m;
}

}  // namespace

json form_to_json(const QuadraticForm& phi) {
  return json{{"n", phi.dim()}, {"a", qmat_to_json(phi.a)}};
}

QuadraticForm form_from_json(const json& j) {
  if (!j.contains("a")) throw input_error("form document needs an \"a\" matrix");
  QuadraticForm phi{qmat_from_json(j["a"])};
  if (j.contains("n") && j["n"].get<size_t>() != phi.dim())
    throw input_error("form dimension disagrees with its matrix");
  return phi;
}

json imat_to_json(const IMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) {
      const Int& e = m(i, j);
      if (e.fits_slong_p())
        row.push_back(e.get_si());
      else
        row.push_back(e.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

IMat imat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw input_error("matrix must be a nonempty array of rows");
  size_t rows = j.size(), cols = j[0].size();
  IMat m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw input_error("ragged matrix rows");
    for (size_t k = 0; k < cols; ++k) {
      const auto& cell = j[i][k];
      if (cell.is_number_integer())
        m(i, k) = Int(cell.get<long>());
      else if (cell.is_string())
        m(i, k) = Int(cell.get<std::string>());
      else
        throw input_error("integer matrix entries must be integers or strings");
    }
  }
  return m;
}

json certificate_to_json(const ReductionCertificate& cert) {
  JacobiDecomposition jd = jacobi_decompose(cert.reduced);
  json t = json::array();
  for (const Rat& x : jd.t) t.push_back(rat_to_string(x));
  return json{{"gamma", imat_to_json(cert.gamma)},
              {"reduced", form_to_json(cert.reduced)},
              {"t", std::move(t)},
              {"u", qmat_to_json(jd.u)}};
}

json presentation_to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back(g);
  json rels = json::array();
  for (const FreeWord& w : p.relators) {
    json rel = json::array();
    for (const auto& [g, e] : w.syllables())
      rel.push_back(json::array({p.generators.at(g), e.get_si()}));
    rels.push_back(std::move(rel));
  }
  return json{{"generators", std::move(gens)}, {"relators", std::move(rels)}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  for (const auto& g : j.at("generators")) p.generators.push_back(g.get<std::string>());
  for (const auto& rel : j.at("relators")) {
    FreeWord w;
    for (const auto& syl : rel) {
      std::string name = syl.at(0).get<std::string>();
      long e = syl.at(1).get<long>();
      auto it = std::find(p.generators.begin(), p.generators.end(), name);
      if (it == p.generators.end()) throw input_error("relator uses undeclared generator " + name);
      w.append(static_cast<int>(it - p.generators.begin()), Int(e));
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return json{{"version", kToolVersion},
              {"command", r.command},
              {"checks", std::move(checks)},
              {"pass", r.all_pass()}};
}

}  // namespace arith
