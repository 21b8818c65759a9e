#include "iscp/isg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace iscp::isg {

ValidationReport InverseSemigroup::validate(int n, const std::vector<int>& mul,
                                            const std::vector<int>& inv,
                                            std::optional<int> unit, std::optional<int> zero) {
  if (n <= 0) throw structural_error("semigroup size must be positive");
  if ((int)mul.size() != n * n) throw structural_error("multiplication table has wrong shape");
  if ((int)inv.size() != n) throw structural_error("involution table has wrong shape");
  for (int v : mul)
    if (v < 0 || v >= n) throw structural_error("multiplication table entry out of range");
  for (int v : inv)
    if (v < 0 || v >= n) throw structural_error("involution entry out of range");
  if (unit && (*unit < 0 || *unit >= n)) throw structural_error("unit index out of range");
  if (zero && (*zero < 0 || *zero >= n)) throw structural_error("zero index out of range");

  ValidationReport rep;
  auto m = [&](int a, int b) { return mul[a * n + b]; };

  bool assoc_done = false;
  for (int a = 0; a < n && !assoc_done; ++a)
    for (int b = 0; b < n && !assoc_done; ++b)
      for (int c = 0; c < n && !assoc_done; ++c)
        if (m(m(a, b), c) != m(a, m(b, c))) {
          rep.add("associativity", {a, b, c});
          assoc_done = true;
        }

  for (int t = 0; t < n; ++t) {
    int s = inv[t];
    if (m(m(t, s), t) != t || m(m(s, t), s) != s) {
      rep.add("inverse-identity", {t});
      break;
    }
  }
  {
    bool done = false;
    for (int t = 0; t < n && !done; ++t)
      for (int s = 0; s < n && !done; ++s)
        if (s != inv[t] && m(m(t, s), t) == t && m(m(s, t), s) == s) {
          rep.add("inverse-unique", {t, s});
          done = true;
        }
  }
  for (int t = 0; t < n; ++t)
    if (inv[inv[t]] != t) {
      rep.add("involution", {t});
      break;
    }
  {
    bool done = false;
    for (int a = 0; a < n && !done; ++a)
      for (int b = 0; b < n && !done; ++b)
        if (inv[m(a, b)] != m(inv[b], inv[a])) {
          rep.add("anti-homomorphism", {a, b});
          done = true;
        }
  }
  {
    bool done = false;
    for (int e = 0; e < n && !done; ++e) {
      if (m(e, e) != e) continue;
      for (int f = 0; f < n && !done; ++f) {
        if (m(f, f) != f) continue;
        if (m(e, f) != m(f, e)) {
          rep.add("idempotents-commute", {e, f});
          done = true;
        }
      }
    }
  }
  if (unit) {
    for (int t = 0; t < n; ++t)
      if (m(*unit, t) != t || m(t, *unit) != t) {
        rep.add("unit-law", {t});
        break;
      }
  }
  if (zero) {
    for (int t = 0; t < n; ++t)
      if (m(*zero, t) != *zero || m(t, *zero) != *zero) {
        rep.add("zero-law", {t});
        break;
      }
  }
  return rep;
}

InverseSemigroup::InverseSemigroup(int size, std::vector<int> mul, std::vector<int> inv,
                                   std::optional<int> unit, std::optional<int> zero,
                                   std::vector<std::string> labels)
    : n_(size), mul_(std::move(mul)), inv_(std::move(inv)), unit_(unit), zero_(zero),
      labels_(std::move(labels)) {
  auto rep = validate(n_, mul_, inv_, unit_, zero_);
  if (!rep.valid) {
    std::ostringstream os;
    os << "inverse semigroup axioms violated:";
    for (auto& v : rep.violations) {
      os << " " << v.axiom << "(";
      for (size_t i = 0; i < v.witness.size(); ++i) os << (i ? "," : "") << v.witness[i];
      os << ")";
    }
    throw axiom_error(os.str());
  }
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if ((int)labels_.size() != n_) throw structural_error("label list has wrong length");
}

std::vector<int> InverseSemigroup::idempotents() const {
  std::vector<int> out;
  for (int e = 0; e < n_; ++e)
    if (is_idempotent(e)) out.push_back(e);
  return out;
}

bool InverseSemigroup::leq(int t, int u) const {
  bool direct = (t == mul(u, mul(inv(t), t)));
  bool via_idem = false;
  for (int e = 0; e < n_ && !via_idem; ++e)
    if (is_idempotent(e) && mul(u, e) == t) via_idem = true;
  if (direct != via_idem)
    throw internal_check_error("leq: the two order characterisations disagree");
  return direct;
}

std::vector<int> InverseSemigroup::lower_bounds(int t, int u) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (leq(v, t) && leq(v, u)) out.push_back(v);
  return out;
}

InverseSemigroup InverseSemigroup::adjoin_unit() const {
  int m = n_ + 1, one = n_;
  std::vector<int> mul(m * m), inv(m);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) mul[a * m + b] = this->mul(a, b);
  for (int a = 0; a < n_; ++a) {
    mul[a * m + one] = a;
    mul[one * m + a] = a;
    inv[a] = this->inv(a);
  }
  mul[one * m + one] = one;
  inv[one] = one;
  auto labels = labels_;
  labels.push_back("1+");
  return InverseSemigroup(m, std::move(mul), std::move(inv), one, zero_, std::move(labels));
}

InverseSemigroup InverseSemigroup::adjoin_zero() const {
  int m = n_ + 1, z = n_;
  std::vector<int> mul(m * m), inv(m);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) mul[a * m + b] = this->mul(a, b);
  for (int a = 0; a < n_; ++a) {
    mul[a * m + z] = z;
    mul[z * m + a] = z;
    inv[a] = this->inv(a);
  }
  mul[z * m + z] = z;
  inv[z] = z;
  auto labels = labels_;
  labels.push_back("0");
  return InverseSemigroup(m, std::move(mul), std::move(inv), unit_, z, std::move(labels));
}

InverseSemigroup::PredicateResult InverseSemigroup::is_e_star_unitary() const {
  if (!zero_) throw precondition_error("is_e_star_unitary needs a zero element");
  PredicateResult direct;
  for (int e = 0; e < n_ && direct.value; ++e) {
    if (!is_idempotent(e) || e == *zero_) continue;
    for (int t = 0; t < n_; ++t) {
      if (leq(e, t) && !is_idempotent(t)) {
        direct.value = false;
        direct.witness = {e, t};
        break;
      }
    }
  }
  auto viaOrder = order_condition();
  if (direct.value != viaOrder.value)
    throw internal_check_error("E*-unitary: idempotency route and order route disagree");
  return direct;
}

InverseSemigroup::PredicateResult InverseSemigroup::order_condition() const {
  if (!zero_) throw precondition_error("order_condition needs a zero element");
  if (!unit_) {
    auto up = adjoin_unit();
    auto r = up.order_condition();
    if (r.witness && (r.witness->first >= n_ || r.witness->second >= n_))
      throw internal_check_error("order_condition witness escaped the original semigroup");
    return r;
  }
  PredicateResult res;
  for (int e = 0; e < n_ && res.value; ++e) {
    if (e == *zero_ || !leq(e, *unit_)) continue;
    for (int t = 0; t < n_; ++t) {
      if (leq(e, t) && !leq(t, *unit_)) {
        res.value = false;
        res.witness = {e, t};
        break;
      }
    }
  }
  return res;
}

InverseSemigroup::PredicateResult InverseSemigroup::is_e_unitary() const {
  PredicateResult res;
  for (int e = 0; e < n_ && res.value; ++e) {
    if (!is_idempotent(e)) continue;
    for (int t = 0; t < n_; ++t) {
      if (leq(e, t) && !is_idempotent(t)) {
        res.value = false;
        res.witness = {e, t};
        break;
      }
    }
  }
  return res;
}

std::pair<InverseSemigroup, std::vector<int>> InverseSemigroup::idempotent_semilattice() const {
  std::vector<int> idx = idempotents();
  std::vector<int> back(n_, -1);
  for (size_t i = 0; i < idx.size(); ++i) back[idx[i]] = (int)i;
  int m = (int)idx.size();
  std::vector<int> mul(m * m), inv(m);
  for (int a = 0; a < m; ++a) {
    inv[a] = a;
    for (int b = 0; b < m; ++b) {
      int p = this->mul(idx[a], idx[b]);
      if (back[p] < 0) throw internal_check_error("idempotents not closed under product");
      mul[a * m + b] = back[p];
    }
  }
  std::optional<int> unit, zero;
  if (unit_ && back[*unit_] >= 0) unit = back[*unit_];
  if (zero_ && back[*zero_] >= 0) zero = back[*zero_];
  std::vector<std::string> labels;
  for (int i : idx) labels.push_back(labels_[i]);
  return {InverseSemigroup(m, std::move(mul), std::move(inv), unit, zero, std::move(labels)), idx};
}

std::vector<int> InverseSemigroup::lex_order() const {
  std::vector<int> ord(n_);
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](int a, int b) { return labels_[a] < labels_[b]; });
  return ord;
}

std::vector<int> InverseSemigroup::index_order() const {
  std::vector<int> ord(n_);
  std::iota(ord.begin(), ord.end(), 0);
  return ord;
}

PartialBijection PartialBijection::empty_map(int n) {
  return {n, std::vector<int>(n, -1)};
}

PartialBijection PartialBijection::identity(int n) {
  PartialBijection p{n, std::vector<int>(n)};
  std::iota(p.map.begin(), p.map.end(), 0);
  return p;
}

PartialBijection PartialBijection::inverse() const {
  PartialBijection r = empty_map(n);
  for (int x = 0; x < n; ++x)
    if (map[x] >= 0) r.map[map[x]] = x;
  return r;
}

PartialBijection PartialBijection::compose(const PartialBijection& other) const {
  PartialBijection r = empty_map(n);
  for (int x = 0; x < n; ++x) {
    int y = other.map[x];
    if (y >= 0 && map[y] >= 0) r.map[x] = map[y];
  }
  return r;
}

std::string PartialBijection::describe() const {
  std::ostringstream os;
  bool any = false;
  os << "[";
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0) continue;
    if (any) os << ",";
    os << (x + 1) << ">" << (map[x] + 1);
    any = true;
  }
  os << "]";
  return any ? os.str() : std::string("[]");
}

GeneratedSemigroup from_partial_bijections(int n, const std::vector<PartialBijection>& generators,
                                           int cap) {
  for (auto& g : generators) {
    if (g.n != n || (int)g.map.size() != n)
      throw structural_error("generator has wrong point count");
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      int y = g.map[x];
      if (y < -1 || y >= n) throw structural_error("generator map value out of range");
      if (y >= 0) {
        if (seen[y]) throw structural_error("generator is not injective");
        seen[y] = true;
      }
    }
  }

  std::vector<PartialBijection> elems;
  std::map<std::vector<int>, int> index;
  auto intern = [&](const PartialBijection& p) -> int {
    auto it = index.find(p.map);
    if (it != index.end()) return it->second;
    if ((int)elems.size() >= cap) throw resource_error("closure exceeded the size cap");
    int id = (int)elems.size();
    elems.push_back(p);
    index.emplace(p.map, id);
    return id;
  };

  if (generators.empty()) {
    intern(PartialBijection::empty_map(n));
  } else {
    for (auto& g : generators) intern(g);
  }

  // close under inversion and two-sided composition
  for (size_t head = 0; head < elems.size(); ++head) {
    PartialBijection cur = elems[head];
    intern(cur.inverse());
    size_t known = elems.size();
    for (size_t j = 0; j < known; ++j) {
      PartialBijection b = elems[j];
      intern(cur.compose(b));
      intern(b.compose(cur));
    }
  }

  int m = (int)elems.size();
  std::vector<int> mul(m * m), inv(m);
  for (int a = 0; a < m; ++a) {
    inv[a] = index.at(elems[a].inverse().map);
    for (int b = 0; b < m; ++b) mul[a * m + b] = index.at(elems[a].compose(elems[b]).map);
  }
  std::optional<int> unit, zero;
  {
    auto it = index.find(PartialBijection::identity(n).map);
    if (it != index.end()) unit = it->second;
    it = index.find(PartialBijection::empty_map(n).map);
    if (it != index.end()) zero = it->second;
  }
  std::vector<std::string> labels;
  for (auto& p : elems) labels.push_back(p.describe());
  InverseSemigroup sg(m, std::move(mul), std::move(inv), unit, zero, std::move(labels));
  return {std::move(sg), std::move(elems)};
}

}  // namespace iscp::isg
