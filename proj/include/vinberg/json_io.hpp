#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vinberg/cartan.hpp"
#include "vinberg/coxeter.hpp"
#include "vinberg/errors.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/rational.hpp"
#include "vinberg/represent.hpp"
#include "vinberg/subgroups.hpp"

// JSON conventions: rationals travel as strings ("−3/2" style) so nothing is
// rounded, the infinite Coxeter label is 0, and indices visible in documents
// (witness cycles, generator words, pairs) are 1-based.  Internally all
// indices are 0-based; conversion happens here and in the CLI only.

namespace vinberg {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorCode::InvalidArgument, std::string("missing field \"") + key + "\"");
  return *it;
}

inline Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail(ErrorCode::InvalidArgument, "expected a rational as string or integer");
}

inline std::vector<Rat> rat_vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "expected an array of rationals");
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

inline Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

inline RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::InvalidArgument, "expected a nonempty matrix");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols)
      fail(ErrorCode::InvalidArgument, "ragged matrix rows");
    for (int k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

inline Json rat_matrix_to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

inline Json int_matrix_to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

// 0-based internal word -> 1-based JSON word, and back.
inline Json word_to_json(const std::vector<int>& w) {
  Json j = Json::array();
  for (int letter : w) j.push_back(letter + 1);
  return j;
}

inline std::vector<int> word_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidArgument, "expected a word as an array");
  std::vector<int> w;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::InvalidArgument, "word letters must be integers");
    w.push_back(x.get<int>() - 1);
  }
  return w;
}

inline Json cycle_to_json(const std::vector<int>& c) { return word_to_json(c); }

}  // namespace detail

inline Json coxeter_to_json(const CoxeterMatrix& m) {
  Json j;
  j["rank"] = m.rank();
  j["m"] = m.labels();
  return j;
}

inline CoxeterMatrix coxeter_from_json(const Json& j) {
  const Json& raw = detail::field(j, "m");
  if (!raw.is_array()) fail(ErrorCode::InvalidArgument, "\"m\" must be a matrix");
  std::vector<std::vector<int>> labels;
  for (const auto& row : raw) {
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) fail(ErrorCode::InvalidArgument, "labels must be integers");
      r.push_back(x.get<int>());
    }
    labels.push_back(std::move(r));
  }
  CoxeterMatrix m = CoxeterMatrix::validate(labels);
  if (j.contains("rank") && j["rank"].get<int>() != m.rank())
    fail(ErrorCode::InvalidArgument, "\"rank\" disagrees with the matrix size");
  return m;
}

inline Json cartan_to_json(const CartanMatrix& a) {
  Json j;
  j["rank"] = a.size();
  j["a"] = detail::rat_matrix_to_json(a.entries());
  return j;
}

inline CartanMatrix cartan_from_json(const Json& j) {
  CartanMatrix a = CartanMatrix::validate(detail::rat_matrix_from_json(detail::field(j, "a")));
  if (j.contains("rank") && j["rank"].get<int>() != a.size())
    fail(ErrorCode::InvalidArgument, "\"rank\" disagrees with the matrix size");
  return a;
}

// Representations serialize as a superset: generators plus root data plus the
// derived Cartan and Coxeter matrices.  Readers accept documents without the
// derived matrices and recompute them from the pairings.
inline Json rep_to_json(const ReflectionRep& rep) {
  Json j;
  j["dim"] = rep.dim;
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(detail::rat_matrix_to_json(g));
  j["generators"] = std::move(gens);
  Json alphas = Json::array(), vs = Json::array();
  for (const auto& a : rep.alphas) alphas.push_back(detail::rat_vector_to_json(a));
  for (const auto& v : rep.vs) vs.push_back(detail::rat_vector_to_json(v));
  j["alphas"] = std::move(alphas);
  j["vs"] = std::move(vs);
  j["cartan"] = cartan_to_json(rep.cartan);
  j["coxeter"] = coxeter_to_json(rep.coxeter);
  return j;
}

inline ReflectionRep rep_from_json(const Json& j) {
  const int dim = detail::field(j, "dim").get<int>();
  std::vector<RatMatrix> gens;
  for (const auto& g : detail::field(j, "generators"))
    gens.push_back(detail::rat_matrix_from_json(g));
  std::vector<std::vector<Rat>> alphas, vs;
  for (const auto& a : detail::field(j, "alphas")) alphas.push_back(detail::rat_vector_from_json(a));
  for (const auto& v : detail::field(j, "vs")) vs.push_back(detail::rat_vector_from_json(v));
  const int k = static_cast<int>(gens.size());
  if (static_cast<int>(alphas.size()) != k || static_cast<int>(vs.size()) != k)
    fail(ErrorCode::InvalidArgument, "generator/alpha/v count mismatch");

  RatMatrix pairing(k, k);
  for (int s = 0; s < k; ++s) {
    if (static_cast<int>(alphas[s].size()) != dim || static_cast<int>(vs[s].size()) != dim)
      fail(ErrorCode::InvalidArgument, "alpha/v length does not match dimension");
    for (int t = 0; t < k; ++t) pairing(s, t) = dot(alphas[s], vs[t]);
  }

  CartanMatrix cartan = j.contains("cartan") ? cartan_from_json(j["cartan"])
                                             : CartanMatrix::validate(pairing);
  CoxeterMatrix coxeter = [&] {
    if (j.contains("coxeter")) return coxeter_from_json(j["coxeter"]);
    std::vector<std::vector<int>> labels(k, std::vector<int>(k, 1));
    for (int s = 0; s < k; ++s)
      for (int t = s + 1; t < k; ++t) {
        Rat p = cartan(s, t) * cartan(t, s);
        std::string pair = "(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
        labels[s][t] = labels[t][s] = detail::label_from_product(p, gens[s] == gens[t], pair);
      }
    return CoxeterMatrix::validate(labels);
  }();
  return ReflectionRep::make(dim, std::move(gens), std::move(alphas), std::move(vs),
                             std::move(cartan), std::move(coxeter));
}

}  // namespace vinberg
