#include "obranch/serialize.hpp"

#include <stdexcept>

namespace obranch {

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const Weight& w) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < w.size(); ++k) a.push_back(to_json(w(k)));
  return a;
}

Weight weight_from_json(const Json& j) {
  Weight w(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) w(static_cast<Eigen::Index>(k)) = rational_from_json(j[k]);
  return w;
}

Json to_json(const FDLabel& l) {
  Json j;
  j["N"] = l.N;
  j["mu"] = l.mu;
  j["sign"] = l.sign;
  j["name"] = l.str();
  return j;
}

FDLabel label_from_json(const Json& j) {
  return make_label(j.at("N").get<int>(), j.at("mu").get<std::vector<int>>(), j.value("sign", 1));
}

Json to_json(const MultiSignature& s) {
  Json a = Json::array();
  for (const auto& e : s.entries)
    a.push_back({{"i", e.key.i + 1}, {"j", e.key.j + 1}, {"delta", e.key.delta > 0 ? "+" : "-"}, {"sign", e.sign}});
  return a;
}

Json to_json(const RegionDescriptor& r) {
  Json j;
  j["base"] = to_json(r.base);
  j["nu"] = to_json(r.nu);
  j["signature"] = to_json(r.signature);
  j["away_from_fences"] = r.away_from_fences;
  return j;
}

Json to_json(const StabilityReport& r) {
  Json j;
  j["region"] = to_json(r.region);
  j["constant"] = r.constant;
  Json s = Json::array();
  for (const auto& [l, m] : r.samples) s.push_back({{"lambda", to_json(l)}, {"multiplicity", m}});
  j["samples"] = s;
  Json f = Json::array();
  for (const auto& c : r.fence_crossings) f.push_back({{"from", to_json(c.from)}, {"to", to_json(c.to)}, {"change", c.change}});
  j["fence_crossings"] = f;
  return j;
}

Json to_json(const Polynomial& p, const std::vector<std::string>& names) {
  Json j;
  j["text"] = p.str(names);
  j["variables"] = names;
  j["degree"] = p.total_degree();
  Json t = Json::array();
  for (const auto& [e, c] : p.terms()) t.push_back({{"exponents", e}, {"coefficient", to_json(c)}});
  j["terms"] = t;
  return j;
}

Json to_json(const UEElement& e) {
  Json j;
  j["text"] = e.str();
  j["terms"] = static_cast<long>(e.size());
  j["degree"] = e.degree();
  return j;
}

Json to_json(const RationalFunctionValue& v) {
  Json j;
  j["numerator"] = to_json(v.numerator);
  j["denominator"] = to_json(v.denominator);
  j["defined"] = v.defined;
  if (v.defined) j["value"] = to_json(v.value());
  return j;
}

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(row);
  }
  return rows;
}

MatQ matrix_from_json(const Json& j) {
  const auto r = static_cast<Eigen::Index>(j.size());
  const auto c = r ? static_cast<Eigen::Index>(j[0].size()) : 0;
  MatQ m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != c) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index k = 0; k < c; ++k) m(i, k) = rational_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
  }
  return m;
}

std::string generator_name(const Generator& g) { return "X" + std::to_string(g.i) + "_" + std::to_string(g.j); }

Json to_json(const MatrixRep& rep) {
  Json j;
  j["dim"] = rep.dim;
  Json gens = Json::array(), mats, phases;
  for (std::size_t k = 0; k < rep.frame.gens.size(); ++k) {
    const Generator& g = rep.frame.gens[k];
    const std::string name = generator_name(g);
    gens.push_back(name);
    mats[name] = matrix_to_json(MatQ(rep.Y[k]));
    phases[name] = rep.frame.phase(g.i, g.j);
  }
  j["generators"] = gens;
  j["matrices"] = mats;
  j["phases"] = phases;
  j["G"] = matrix_to_json(MatQ(rep.G));
  j["weights"] = rep.weights;
  Json meta;
  meta["n"] = rep.frame.n;
  meta["frame"] = rep.frame.sub ? "sub" : "full";
  meta["group"] = "O(" + std::to_string(rep.frame.N) + ")";
  meta["group_tag"] = rep.frame.N % 2 ? "O_odd" : "O_even";
  meta["basis"] = "twisted weight basis; X = i^phase * matrix";
  if (rep.label.N == rep.frame.N) meta["label"] = to_json(rep.label);
  if (rep.highest_weight.size()) meta["highest_weight"] = to_json(rep.highest_weight);
  if (rep.inf_char.size()) meta["inf_char"] = to_json(rep.inf_char);
  j["metadata"] = meta;
  return j;
}

MatrixRep rep_from_json(const Json& j) {
  const Json& meta = j.at("metadata");
  const Frame f = make_frame(meta.at("n").get<int>(), meta.at("frame").get<std::string>() == "sub");
  const auto dim = j.at("dim").get<Eigen::Index>();
  MatrixRep r = trivial_rep(f, 1);
  r.dim = dim;
  r.Y.clear();
  for (const Generator& g : f.gens) {
    const MatQ m = matrix_from_json(j.at("matrices").at(generator_name(g)));
    if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("matrix size does not match dim");
    r.Y.push_back(m.sparseView(Rational(0), Rational(0)));
  }
  const MatQ G = matrix_from_json(j.at("G"));
  r.G = G.sparseView(Rational(0), Rational(0));
  r.weights = j.at("weights").get<std::vector<std::vector<int>>>();
  if (static_cast<Eigen::Index>(r.weights.size()) != dim) throw std::invalid_argument("weights size does not match dim");
  r.label = meta.contains("label") ? label_from_json(meta["label"]) : FDLabel{0, {}, 0};
  r.highest_weight = meta.contains("highest_weight") ? weight_from_json(meta["highest_weight"]) : Weight();
  r.inf_char = meta.contains("inf_char") ? weight_from_json(meta["inf_char"]) : Weight();
  check_brackets(r);
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace obranch
