#pragma once

// JSON encodings for lattices, maps, matrices, operators, tensor vectors and
// proper-state spaces.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcomp/compound.hpp"
#include "qcomp/galois.hpp"
#include "qcomp/hilbert.hpp"
#include "qcomp/order.hpp"
#include "qcomp/quantale.hpp"

namespace qcomp::io {

using nlohmann::json;

/// Parses text, turning parser failures into ParseError with line and column.
inline json parse(const std::string& text, const std::string& origin = "<input>") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError,
                origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

inline json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

namespace detail {
template <typename T>
T field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, what + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, what + ": bad \"" + key + "\": " + e.what());
  }
}

/// Accepts an element given either as an index or as a label.
inline Element element(const json& j, const FiniteLattice& L) {
  if (j.is_number_unsigned()) return L.checked(j.get<Element>());
  if (j.is_string()) return L.index_of(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "element must be an index or a label");
}
}  // namespace detail

// ---- lattices -------------------------------------------------------------

struct LatticeDoc {
  FiniteLattice lattice;
  std::optional<std::vector<Element>> ortho;

  OrthoLattice ortho_lattice() const {
    if (!ortho) throw Error(ErrorKind::PreconditionViolated, "lattice has no \"ortho\" table");
    return attach_ortho(lattice, *ortho);
  }
};

/// {"elements": [...], "leq": [[i,j],...], "ortho": [...]}; "covers" may
/// replace "leq", in which case the reflexive-transitive closure is taken.
inline LatticeDoc lattice_from_json(const json& j) {
  auto labels = detail::field<std::vector<std::string>>(j, "elements", "lattice");
  std::vector<std::pair<Element, Element>> pairs;
  const bool closure = !j.contains("leq") && j.contains("covers");
  const char* key = closure ? "covers" : "leq";
  for (const auto& p : detail::field<std::vector<std::vector<Element>>>(j, key, "lattice")) {
    if (p.size() != 2) throw Error(ErrorKind::ParseError, std::string("lattice: \"") + key + "\" entries are pairs");
    pairs.emplace_back(p[0], p[1]);
  }
  LatticeDoc doc{closure ? lattice_from_covers(std::move(labels), pairs)
                         : FiniteLattice::build(std::move(labels), pairs),
                 std::nullopt};
  if (j.contains("ortho")) {
    std::vector<Element> ortho;
    for (const auto& e : j.at("ortho")) ortho.push_back(detail::element(e, doc.lattice));
    doc.ortho = std::move(ortho);
  }
  return doc;
}

inline json lattice_to_json(const FiniteLattice& L, const std::optional<std::vector<Element>>& ortho = std::nullopt) {
  json j;
  j["elements"] = L.labels();
  json leq = json::array();
  for (auto [a, b] : L.leq_pairs()) leq.push_back({a, b});
  j["leq"] = leq;
  if (ortho) j["ortho"] = *ortho;
  return j;
}

// ---- join maps ------------------------------------------------------------

/// A lattice reference is either an inline lattice object or a path, resolved
/// relative to `base_dir`.
inline LatticePtr resolve_lattice(const json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_string()) {
    auto path = std::filesystem::path(ref.get<std::string>());
    if (path.is_relative()) path = base_dir / path;
    return std::make_shared<const FiniteLattice>(lattice_from_json(read_file(path)).lattice);
  }
  return std::make_shared<const FiniteLattice>(lattice_from_json(ref).lattice);
}

inline JoinMap map_from_json(const json& j, const std::filesystem::path& base_dir = ".") {
  if (!j.contains("source") || !j.contains("target"))
    throw Error(ErrorKind::ParseError, "map: needs \"source\" and \"target\"");
  auto L1 = resolve_lattice(j.at("source"), base_dir);
  auto L2 = resolve_lattice(j.at("target"), base_dir);
  std::vector<Element> table;
  if (!j.contains("table") || !j.at("table").is_array()) throw Error(ErrorKind::ParseError, "map: missing \"table\"");
  for (const auto& e : j.at("table")) table.push_back(detail::element(e, *L2));
  return JoinMap(L1, L2, std::move(table));
}

inline json map_to_json(const JoinMap& f) {
  return json{{"source", lattice_to_json(*f.source())},
              {"target", lattice_to_json(*f.target())},
              {"table", f.table()}};
}

inline json meetmap_to_json(const MeetMap& g) {
  return json{{"source", lattice_to_json(*g.source())},
              {"target", lattice_to_json(*g.target())},
              {"table", g.table()}};
}

// ---- matrices and operators -----------------------------------------------

/// {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}, row-major; "im" may
/// be omitted for real matrices.
inline Matrix matrix_from_json(const json& j) {
  const auto rows = detail::field<Eigen::Index>(j, "rows", "matrix");
  const auto cols = detail::field<Eigen::Index>(j, "cols", "matrix");
  auto re = detail::field<std::vector<std::vector<double>>>(j, "re", "matrix");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = detail::field<std::vector<std::vector<double>>>(j, "im", "matrix");
  auto check = [&](const std::vector<std::vector<double>>& part, const char* name) {
    if (static_cast<Eigen::Index>(part.size()) != rows)
      throw Error(ErrorKind::BadShape, std::string("matrix: \"") + name + "\" has the wrong number of rows");
    for (const auto& r : part)
      if (static_cast<Eigen::Index>(r.size()) != cols)
        throw Error(ErrorKind::BadShape, std::string("matrix: \"") + name + "\" has a row of the wrong length");
  };
  check(re, "re");
  if (j.contains("im")) check(im, "im");
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(re[r][c], im.empty() ? 0.0 : im[r][c]);
  return m;
}

inline json matrix_to_json(const Matrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

/// A vector file is a matrix with one column (a single row is also accepted).
inline Vector vector_from_json(const json& j) {
  Matrix m = matrix_from_json(j);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw Error(ErrorKind::BadShape, "vector file must have a single row or column");
}

inline Linearity linearity_from_json(const json& j, Linearity fallback = Linearity::linear) {
  if (!j.contains("linearity")) return fallback;
  const auto s = detail::field<std::string>(j, "linearity", "operator");
  if (s == "linear") return Linearity::linear;
  if (s == "antilinear") return Linearity::antilinear;
  throw Error(ErrorKind::ParseError, "operator: linearity must be \"linear\" or \"antilinear\"");
}

inline CompoundOperator operator_from_json(const json& j) {
  return CompoundOperator(matrix_from_json(j), linearity_from_json(j));
}

inline json operator_to_json(const CompoundOperator& F) {
  json j = matrix_to_json(F.matrix());
  j["linearity"] = to_string(F.linearity());
  return j;
}

// ---- tensor vectors -------------------------------------------------------

/// {"coefficients": {"re": [...], "im": [...]}, "left_basis": <matrix>,
///  "right_basis": <matrix>}; basis vectors are the matrix columns.
inline TensorVector tensor_from_json(const json& j) {
  if (!j.contains("coefficients")) throw Error(ErrorKind::ParseError, "tensor: missing \"coefficients\"");
  const auto& c = j.at("coefficients");
  auto re = detail::field<std::vector<double>>(c, "re", "tensor coefficients");
  std::vector<double> im(re.size(), 0.0);
  if (c.contains("im")) im = detail::field<std::vector<double>>(c, "im", "tensor coefficients");
  if (im.size() != re.size()) throw Error(ErrorKind::BadShape, "tensor: re/im coefficient lengths differ");
  TensorVector tv;
  tv.coefficients.resize(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) tv.coefficients(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  if (!j.contains("left_basis") || !j.contains("right_basis"))
    throw Error(ErrorKind::ParseError, "tensor: needs \"left_basis\" and \"right_basis\"");
  tv.left_basis = matrix_from_json(j.at("left_basis"));
  tv.right_basis = matrix_from_json(j.at("right_basis"));
  validate(tv);
  return tv;
}

inline json tensor_to_json(const TensorVector& tv) {
  std::vector<double> re, im;
  for (Eigen::Index i = 0; i < tv.terms(); ++i) {
    re.push_back(tv.coefficients(i).real());
    im.push_back(tv.coefficients(i).imag());
  }
  return json{{"coefficients", {{"re", re}, {"im", im}}},
              {"left_basis", matrix_to_json(tv.left_basis)},
              {"right_basis", matrix_to_json(tv.right_basis)}};
}

// ---- proper-state spaces --------------------------------------------------

/// {"states": [...], "lattice": <lattice>, "c_map": [li, ...]}
inline SpacePtr space_from_json(const json& j, const std::filesystem::path& base_dir = ".") {
  auto states = detail::field<std::vector<std::string>>(j, "states", "space");
  if (!j.contains("lattice")) throw Error(ErrorKind::ParseError, "space: missing \"lattice\"");
  auto L = resolve_lattice(j.at("lattice"), base_dir);
  if (!j.contains("c_map") || !j.at("c_map").is_array()) throw Error(ErrorKind::ParseError, "space: missing \"c_map\"");
  std::vector<Element> c;
  for (const auto& e : j.at("c_map")) c.push_back(detail::element(e, *L));
  return std::make_shared<const ProperStateSpace>(std::move(states), std::move(L), std::move(c));
}

inline json space_to_json(const ProperStateSpace& S) {
  return json{{"states", S.states()}, {"lattice", lattice_to_json(*S.lattice())}, {"c_map", S.c_map()}};
}

// ---- conversion -----------------------------------------------------------

enum class Format { lattice, map, matrix, tensor };

inline Format format_from_string(const std::string& s) {
  if (s == "lattice-json") return Format::lattice;
  if (s == "map-json") return Format::map;
  if (s == "matrix-json") return Format::matrix;
  if (s == "tv-json") return Format::tensor;
  throw Error(ErrorKind::PreconditionViolated, "unknown format '" + s + "'");
}

/// Same-format conversions validate and re-emit. tv-json → matrix-json gives
/// the anti-linear operator of the tensor; matrix-json → tv-json takes the
/// Schmidt form of the operator.
inline json convert(const json& input, Format from, Format to, const std::filesystem::path& base_dir = ".") {
  if (from == to) {
    switch (from) {
      case Format::lattice: {
        auto doc = lattice_from_json(input);
        return lattice_to_json(doc.lattice, doc.ortho);
      }
      case Format::map: return map_to_json(map_from_json(input, base_dir));
      case Format::matrix: {
        json out = matrix_to_json(matrix_from_json(input));
        if (input.contains("linearity")) out["linearity"] = to_string(linearity_from_json(input));
        return out;
      }
      case Format::tensor: return tensor_to_json(tensor_from_json(input));
    }
  }
  if (from == Format::tensor && to == Format::matrix)
    return operator_to_json(from_tensor(tensor_from_json(input), Linearity::antilinear));
  if (from == Format::matrix && to == Format::tensor) return tensor_to_json(schmidt_tensor(operator_from_json(input)));
  throw Error(ErrorKind::PreconditionViolated, "no conversion between these formats");
}

}  // namespace qcomp::io
