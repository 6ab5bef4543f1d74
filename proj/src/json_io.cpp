#include "gtwidth/json_io.hpp"

namespace gtwidth {

std::string group_token(const GroupSpec& g) {
  switch (g.family) {
    case GroupFamily::UnitaryU: return "u";
    case GroupFamily::OddOrthogonal: return "so-odd";
    case GroupFamily::EvenOrthogonal: return "so-even";
  }
  return "?";
}

GroupSpec group_from_token(const std::string& t, int n) {
  if (t == "u") return {GroupFamily::UnitaryU, n};
  if (t == "so-odd") return {GroupFamily::OddOrthogonal, n};
  if (t == "so-even") return {GroupFamily::EvenOrthogonal, n};
  throw InvalidWeightError("unknown group '" + t + "' (expected u, so-odd or so-even)");
}

Json rationals_json(const RatVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_str(v(i)));
  return out;
}

RatVec rationals_from_json(const Json& j) {
  RatVec v(j.size());
  Eigen::Index i = 0;
  for (const auto& item : j) v(i++) = parse_rational(item.get<std::string>());
  return v;
}

Json weight_json(const Weight& w) {
  Json out;
  out["group"] = group_token(w.group);
  out["n"] = w.group.n;
  out["lambda"] = rationals_json(w.entries);
  return out;
}

Json boxes_json(const Diagram& d) {
  Json out = Json::array();
  for (const auto& info : d.boxes()) out.push_back(Json::array({info.box.j, info.box.k}));
  return out;
}

Json polytope_json(const Polytope& p) {
  const Diagram& d = p.diagram();
  Json out = weight_json(d.weight());
  out["N"] = d.size();
  out["boxes"] = boxes_json(d);
  Json rows = Json::array();
  for (const auto& r : p.inequalities()) {
    Json row;
    Json terms = Json::array();
    for (const auto& [idx, coeff] : r.terms) {
      const Box b = d.boxes()[idx].box;
      terms.push_back(Json::array({Json::array({b.j, b.k}), rational_str(coeff)}));
    }
    row["terms"] = std::move(terms);
    row["rhs"] = rational_str(r.rhs);
    rows.push_back(std::move(row));
  }
  out["inequalities"] = std::move(rows);
  return out;
}

Json certificate_json(const Certificate& c) {
  Json out = weight_json(c.weight);
  out["r_prime"] = rational_str(c.r_prime);
  out["condition_star"] = c.star;
  const Diagram d = Diagram::build(c.weight);
  out["N"] = d.size();
  out["boxes"] = boxes_json(d);
  out["V"] = rationals_json(c.V);
  Json wmat = Json::array();
  for (Eigen::Index r = 0; r < c.W.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index col = 0; col < c.W.cols(); ++col)
      row.push_back(static_cast<std::int64_t>(c.W(r, col)));
    wmat.push_back(std::move(row));
  }
  out["W"] = std::move(wmat);
  out["det_w"] = c.detW;
  Json verts = Json::array();
  for (const auto& v : c.simplex_vertices) verts.push_back(rationals_json(v));
  out["simplex_vertices"] = std::move(verts);
  out["contained"] = c.contained;
  return out;
}

Json sample_report_json(const SampleReport& r) {
  Json out;
  out["samples"] = r.samples;
  out["seed"] = r.seed;
  out["tolerance"] = r.tolerance;
  out["max_violation"] = r.max_violation;
  out["max_constant_dev"] = r.max_constant_dev;
  out["pass"] = r.pass;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

}  // namespace gtwidth
