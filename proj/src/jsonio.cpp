#include "iscp/jsonio.hpp"

namespace iscp::io {

namespace {

int element_index(const isg::InverseSemigroup& s, const std::string& key) {
  try {
    size_t pos = 0;
    int idx = std::stoi(key, &pos);
    if (pos == key.size() && idx >= 0 && idx < s.size()) return idx;
  } catch (...) {
  }
  for (int i = 0; i < s.size(); ++i)
    if (s.labels()[i] == key) return i;
  throw structural_error("unknown semigroup element: " + key);
}

}  // namespace

json report_to_json(const ValidationReport& rep) {
  json out;
  out["valid"] = rep.valid;
  out["violations"] = json::array();
  for (auto& v : rep.violations)
    out["violations"].push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

json semigroup_to_json(const isg::InverseSemigroup& s) {
  json out;
  out["size"] = s.size();
  json mul = json::array();
  for (int a = 0; a < s.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < s.size(); ++b) row.push_back(s.mul(a, b));
    mul.push_back(row);
  }
  out["mul"] = mul;
  out["inv"] = s.inv_table();
  out["unit"] = s.unit() ? json(*s.unit()) : json(nullptr);
  out["zero"] = s.zero() ? json(*s.zero()) : json(nullptr);
  out["labels"] = s.labels();
  return out;
}

std::shared_ptr<const isg::InverseSemigroup> semigroup_from_json(const json& j, int cap) {
  if (j.contains("points") && j.contains("generators")) {
    int n = j.at("points").get<int>();
    if (n <= 0) throw structural_error("points must be positive");
    std::vector<isg::PartialBijection> gens;
    for (auto& g : j.at("generators")) {
      auto p = isg::PartialBijection::empty_map(n);
      for (auto& [src, dst] : g.at("map").items()) {
        int x = std::stoi(src), y = dst.get<int>();
        if (x < 1 || x > n || y < 1 || y > n)
          throw structural_error("generator point out of range (points are 1-based)");
        p.map[x - 1] = y - 1;
      }
      gens.push_back(p);
    }
    auto gen = isg::from_partial_bijections(n, gens, cap);
    return std::make_shared<isg::InverseSemigroup>(gen.semigroup);
  }

  int n = j.at("size").get<int>();
  std::vector<int> mul;
  for (auto& row : j.at("mul"))
    for (auto& v : row) mul.push_back(v.get<int>());
  std::vector<int> inv = j.at("inv").get<std::vector<int>>();
  std::optional<int> unit, zero;
  if (j.contains("unit") && !j.at("unit").is_null()) unit = j.at("unit").get<int>();
  if (j.contains("zero") && !j.at("zero").is_null()) zero = j.at("zero").get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return std::make_shared<isg::InverseSemigroup>(n, std::move(mul), std::move(inv), unit, zero,
                                                 std::move(labels));
}

json space_to_json(const topo::FiniteSpace& x) {
  json out;
  out["points"] = x.labels();
  json opens = json::array();
  for (auto& o : x.opens()) {
    json set = json::array();
    for (int p : o.elements()) set.push_back(x.labels()[p]);
    opens.push_back(set);
  }
  out["opens"] = opens;
  return out;
}

topo::FiniteSpace space_from_json(const json& j) {
  std::vector<std::string> labels = j.at("points").get<std::vector<std::string>>();
  int n = (int)labels.size();
  auto index = [&](const std::string& l) {
    for (int i = 0; i < n; ++i)
      if (labels[i] == l) return i;
    throw structural_error("unknown point label: " + l);
  };
  std::vector<SubSet> opens;
  for (auto& o : j.at("opens")) {
    SubSet s(n);
    for (auto& l : o) s.set(index(l.get<std::string>()));
    opens.push_back(s);
  }
  return topo::FiniteSpace(n, std::move(opens), std::move(labels));
}

json action_to_json(const act::SpaceAction& a) {
  json out;
  out["semigroup"] = semigroup_to_json(a.S());
  out["space"] = space_to_json(a.X());
  json maps;
  for (int t = 0; t < a.S().size(); ++t) {
    json m;
    json dom = json::array();
    json mp = json::object();
    for (int x : a.domain(t).elements()) {
      dom.push_back(a.X().labels()[x]);
      mp[a.X().labels()[x]] = a.X().labels()[a.apply(t, x)];
    }
    m["domain"] = dom;
    m["map"] = mp;
    maps[std::to_string(t)] = m;
  }
  out["maps"] = maps;
  out["zero_preserving"] = a.zero_preserving();
  return out;
}

act::SpaceAction action_from_json(const json& j, int cap) {
  auto S = semigroup_from_json(j.at("semigroup"), cap);
  auto X = space_from_json(j.at("space"));
  int nx = X.points();
  std::vector<std::vector<int>> maps(S->size(), std::vector<int>(nx, -1));
  for (auto& [key, m] : j.at("maps").items()) {
    int t = element_index(*S, key);
    for (auto& [src, dst] : m.at("map").items()) {
      maps[t][X.label_index(src)] = X.label_index(dst.get<std::string>());
    }
    if (m.contains("domain")) {
      SubSet dom(nx);
      for (auto& l : m.at("domain")) dom.set(X.label_index(l.get<std::string>()));
      SubSet from_map(nx);
      for (int x = 0; x < nx; ++x)
        if (maps[t][x] >= 0) from_map.set(x);
      if (dom != from_map) throw structural_error("declared domain disagrees with the map");
    }
  }
  bool zero_preserving = false;
  if (j.contains("zero_preserving"))
    zero_preserving = j.at("zero_preserving").get<bool>();
  else if (S->zero()) {
    bool empty = true;
    for (int x = 0; x < nx; ++x)
      if (maps[*S->zero()][x] >= 0) empty = false;
    zero_preserving = empty;
  }
  return act::SpaceAction(S, std::move(X), std::move(maps), zero_preserving);
}

json groupoid_to_json(const act::GermGroupoid& g) {
  json out;
  const auto& labels = g.action().X().labels();
  json arrows = json::array();
  for (int a = 0; a < g.arrows(); ++a) {
    auto [t, x] = g.representative(a);
    arrows.push_back({{"element", t},
                      {"at", labels[x]},
                      {"source", labels[g.source(a)]},
                      {"range", labels[g.range(a)]}});
  }
  out["arrows"] = arrows;
  out["units"] = g.units().elements();
  json comp = json::array();
  for (int a = 0; a < g.arrows(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.arrows(); ++b) row.push_back(g.compose(a, b));
    comp.push_back(row);
  }
  out["composition"] = comp;
  json inv = json::array();
  for (int a = 0; a < g.arrows(); ++a) inv.push_back(g.inverse(a));
  out["inverse"] = inv;
  json basis = json::array();
  for (auto& b : g.basis()) basis.push_back(b.elements());
  out["topology"] = {{"basis", basis}};
  json bisections = json::object();
  for (int t = 0; t < g.action().S().size(); ++t)
    bisections[std::to_string(t)] = g.bisection(t).elements();
  out["bisections"] = bisections;
  return out;
}

json element_to_json(const fd::AlgElement& e) {
  json blocks = json::array();
  for (int b = 0; b < e.algebra().num_blocks(); ++b) {
    json rows = json::array();
    for (int i = 0; i < e.algebra().blocks[b]; ++i) {
      json row = json::array();
      for (int k = 0; k < e.algebra().blocks[b]; ++k)
        row.push_back({e.block(b)(i, k).real(), e.block(b)(i, k).imag()});
      rows.push_back(row);
    }
    blocks.push_back(rows);
  }
  return blocks;
}

fd::AlgElement element_from_json(const fd::FdAlgebra& a, const json& j) {
  if ((int)j.size() != a.num_blocks()) throw structural_error("element has wrong block count");
  fd::AlgElement e(a);
  for (int b = 0; b < a.num_blocks(); ++b) {
    auto& rows = j.at(b);
    if ((int)rows.size() != a.blocks[b]) throw structural_error("element block has wrong shape");
    for (int i = 0; i < a.blocks[b]; ++i) {
      if ((int)rows.at(i).size() != a.blocks[b])
        throw structural_error("element block has wrong shape");
      for (int k = 0; k < a.blocks[b]; ++k) {
        auto& entry = rows.at(i).at(k);
        e.block(b)(i, k) = fd::cd(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
  }
  return e;
}

json fd_action_to_json(const fd::PartialIsoAction& a) {
  json out;
  out["semigroup"] = semigroup_to_json(a.S());
  out["blocks"] = a.A().blocks;
  json maps;
  for (int t = 0; t < a.S().size(); ++t) {
    json m;
    m["source"] = a.source_ideal(t).elements();
    m["target"] = a.target_ideal(t).elements();
    json bm = json::object(), us = json::object();
    for (int b : a.source_ideal(t).elements()) {
      bm[std::to_string(b)] = a.beta(t, b);
      const auto& u = a.unitary(t, b);
      json rows = json::array();
      for (int i = 0; i < u.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < u.cols(); ++k) row.push_back({u(i, k).real(), u(i, k).imag()});
        rows.push_back(row);
      }
      us[std::to_string(b)] = rows;
    }
    m["block_map"] = bm;
    m["unitaries"] = us;
    maps[std::to_string(t)] = m;
  }
  out["maps"] = maps;
  return out;
}

fd::PartialIsoAction fd_action_from_json(const json& j, int cap) {
  auto S = semigroup_from_json(j.at("semigroup"), cap);
  fd::FdAlgebra A{j.at("blocks").get<std::vector<int>>()};
  int k = A.num_blocks();
  std::vector<fd::PartialIsoAction::ElementData> data(S->size());
  for (auto& d : data) {
    d.source = SubSet(k);
    d.beta.assign(k, -1);
    d.u.assign(k, fd::Mat());
  }
  for (auto& [key, m] : j.at("maps").items()) {
    int t = element_index(*S, key);
    auto& d = data[t];
    for (auto& b : m.at("source")) d.source.set(b.get<int>());
    for (auto& [bs, target] : m.at("block_map").items()) {
      int b = std::stoi(bs);
      if (b < 0 || b >= k) throw structural_error("block index out of range");
      d.beta[b] = target.get<int>();
    }
    for (auto& [bs, rows] : m.at("unitaries").items()) {
      int b = std::stoi(bs);
      fd::Mat u(A.blocks[b], A.blocks[b]);
      for (int i = 0; i < A.blocks[b]; ++i)
        for (int c = 0; c < A.blocks[b]; ++c) {
          auto& entry = rows.at(i).at(c);
          u(i, c) = fd::cd(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
      d.u[b] = u;
    }
  }
  return fd::PartialIsoAction(S, std::move(A), std::move(data));
}

json crossed_to_json(const xp::CrossedElement& x) {
  json terms = json::object();
  for (auto& [t, xi] : x.terms()) terms[std::to_string(t)] = element_to_json(xi);
  return {{"terms", terms}};
}

xp::CrossedElement crossed_from_json(const fd::PartialIsoAction& a, const json& j) {
  xp::CrossedElement x(a);
  for (auto& [key, e] : j.at("terms").items()) {
    int t = element_index(a.S(), key);
    x.set_coeff(t, element_from_json(a.A(), e));
  }
  return x;
}

}  // namespace iscp::io
