#include "iscp/topo.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace iscp::topo {

ValidationReport FiniteSpace::validate_family(int n, const std::vector<SubSet>& fam) {
  ValidationReport rep;
  for (auto& s : fam)
    if (s.universe() != n) throw structural_error("open set has wrong universe size");
  auto contains = [&](const SubSet& s) {
    return std::find(fam.begin(), fam.end(), s) != fam.end();
  };
  if (!contains(SubSet(n))) rep.add("contains-empty", {});
  if (!contains(SubSet::full(n))) rep.add("contains-full", {});
  for (size_t i = 0; i < fam.size() && rep.valid; ++i)
    for (size_t j = i; j < fam.size(); ++j) {
      if (!contains(fam[i] | fam[j])) {
        rep.add("union-closed", {(int)i, (int)j});
        break;
      }
      if (!contains(fam[i] & fam[j])) {
        rep.add("intersection-closed", {(int)i, (int)j});
        break;
      }
    }
  return rep;
}

FiniteSpace::FiniteSpace(int n, std::vector<SubSet> opens, std::vector<std::string> labels)
    : n_(n), opens_(std::move(opens)), labels_(std::move(labels)) {
  if (n_ < 0) throw structural_error("negative point count");
  auto rep = validate_family(n_, opens_);
  if (!rep.valid) throw axiom_error("open-set family is not a topology: " + rep.violations[0].axiom);
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  if (labels_.empty())
    for (int i = 0; i < n_; ++i) labels_.push_back("p" + std::to_string(i));
  if ((int)labels_.size() != n_) throw structural_error("label list has wrong length");
}

FiniteSpace FiniteSpace::discrete(int n, std::vector<std::string> labels) {
  if (n > 20) throw resource_error("discrete space too large to store explicitly");
  std::vector<SubSet> opens;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    SubSet s(n);
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) s.set(i);
    opens.push_back(s);
  }
  return FiniteSpace(n, std::move(opens), std::move(labels));
}

FiniteSpace FiniteSpace::indiscrete(int n, std::vector<std::string> labels) {
  return FiniteSpace(n, {SubSet(n), SubSet::full(n)}, std::move(labels));
}

FiniteSpace FiniteSpace::from_basis(int n, const std::vector<SubSet>& basis,
                                    std::vector<std::string> labels, size_t cap) {
  // intersections of basis sets must already be unions of basis sets
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      SubSet inter = basis[i] & basis[j];
      SubSet covered(n);
      for (auto& b : basis)
        if (b.subset_of(inter)) covered = covered | b;
      if (covered != inter) throw axiom_error("generating family is not a basis");
    }
  std::unordered_set<SubSet, SubSetHash> seen;
  std::vector<SubSet> work{SubSet(n)};
  seen.insert(SubSet(n));
  for (size_t head = 0; head < work.size(); ++head) {
    SubSet cur = work[head];
    for (auto& b : basis) {
      SubSet u = cur | b;
      if (seen.insert(u).second) {
        work.push_back(u);
        if (work.size() > cap) throw resource_error("open-set lattice exceeded the cap");
      }
    }
  }
  if (!seen.count(SubSet::full(n))) work.push_back(SubSet::full(n));
  return FiniteSpace(n, std::move(work), std::move(labels));
}

int FiniteSpace::label_index(const std::string& l) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == l) return i;
  throw structural_error("unknown point label: " + l);
}

bool FiniteSpace::is_open(const SubSet& s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

SubSet FiniteSpace::closure(const SubSet& s) const {
  SubSet avoid(n_);
  for (auto& o : opens_)
    if (!o.intersects(s)) avoid = avoid | o;
  return avoid.complement();
}

bool FiniteSpace::is_closed_in(const SubSet& a, const SubSet& b) const {
  if (!is_open(b)) throw precondition_error("is_closed_in: ambient set must be open");
  if (!a.subset_of(b)) throw precondition_error("is_closed_in: subset not contained in ambient");
  SubSet rest = b - a;
  for (auto& o : opens_)
    if ((o & b) == rest) return true;
  return false;
}

bool FiniteSpace::is_discrete() const {
  for (int x = 0; x < n_; ++x)
    if (min_open(x).count() != 1) return false;
  return true;
}

SubSet FiniteSpace::min_open(int x) const {
  SubSet m = SubSet::full(n_);
  for (auto& o : opens_)
    if (o.test(x) && o.count() < m.count()) m = o;
  return m;
}

bool FiniteSpace::is_hausdorff() const {
  bool separated = true;
  for (int x = 0; x < n_ && separated; ++x)
    for (int y = x + 1; y < n_ && separated; ++y) {
      bool found = false;
      for (auto& u : opens_) {
        if (!u.test(x) || u.test(y)) continue;
        for (auto& v : opens_) {
          if (v.test(y) && !u.intersects(v)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) separated = false;
    }
  bool discrete = is_discrete();
  if (separated != discrete)
    throw internal_check_error("hausdorff: separation test disagrees with discreteness");
  return separated;
}

FiniteSpace SemilatticeSpectrum::paterson_space() const {
  return FiniteSpace::discrete(characters(), space.labels());
}

SemilatticeSpectrum semilattice_spectrum(const isg::InverseSemigroup& E) {
  int m = E.size();
  for (int e = 0; e < m; ++e) {
    if (!E.is_idempotent(e)) throw precondition_error("spectrum input must be idempotent");
    for (int f = 0; f < m; ++f)
      if (E.mul(e, f) != E.mul(f, e)) throw precondition_error("spectrum input must be commutative");
  }
  if (!E.unit() || !E.zero())
    throw precondition_error("spectrum input needs a zero and a unit");
  int zero = *E.zero();

  // every character is the indicator of a principal filter on a nonzero
  // element: phi_g(e) = 1 iff e >= g, i.e. eg = g
  std::vector<int> gens;
  std::vector<SubSet> chars;
  for (int g = 0; g < m; ++g) {
    if (g == zero) continue;
    SubSet phi(m);
    for (int e = 0; e < m; ++e)
      if (E.mul(e, g) == g) phi.set(e);
    gens.push_back(g);
    chars.push_back(phi);
  }
  int nc = (int)chars.size();

  std::vector<SubSet> basis(m, SubSet(nc));
  for (int e = 0; e < m; ++e)
    for (int c = 0; c < nc; ++c)
      if (chars[c].test(e)) basis[e].set(c);

  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if ((basis[e] & basis[f]) != basis[E.mul(e, f)])
        throw internal_check_error("spectrum basis law U_e * U_f = U_{ef} failed");

  std::vector<std::string> labels;
  for (int c = 0; c < nc; ++c) labels.push_back("phi[" + E.labels()[gens[c]] + "]");
  FiniteSpace space = FiniteSpace::from_basis(nc, basis, labels);

  return SemilatticeSpectrum{E, std::move(gens), std::move(chars), std::move(basis),
                             std::move(space), true};
}

bool ideal_open_bijection_check(const SemilatticeSpectrum& spec) {
  const auto& E = spec.E;
  int m = E.size(), zero = *E.zero();

  // the ideals of E: down-closed subsets containing 0, generated as
  // unions of principal down-sets
  std::vector<SubSet> principal;
  for (int e = 0; e < m; ++e) {
    SubSet d(m);
    for (int f = 0; f < m; ++f)
      if (E.mul(f, e) == f) d.set(f);
    d.set(zero);
    principal.push_back(d);
  }
  std::unordered_set<SubSet, SubSetHash> seen;
  SubSet bottom(m);
  bottom.set(zero);
  std::vector<SubSet> ideals{bottom};
  seen.insert(bottom);
  for (size_t head = 0; head < ideals.size(); ++head) {
    for (auto& p : principal) {
      SubSet u = ideals[head] | p;
      if (seen.insert(u).second) ideals.push_back(u);
    }
  }

  std::map<SubSet, SubSet> image;  // open set -> ideal
  for (auto& v : spec.space.opens()) {
    SubSet ide(m);
    for (int e = 0; e < m; ++e)
      if (spec.basis[e].subset_of(v)) ide.set(e);
    image[v] = ide;
  }
  if (image.size() != spec.space.opens().size()) return false;

  std::unordered_set<SubSet, SubSetHash> hit;
  for (auto& [v, ide] : image) {
    if (!std::count(ideals.begin(), ideals.end(), ide)) return false;
    if (!hit.insert(ide).second) return false;  // injectivity
  }
  if (hit.size() != ideals.size()) return false;  // surjectivity

  for (auto& [v1, i1] : image)
    for (auto& [v2, i2] : image) {
      if (v1.subset_of(v2) != i1.subset_of(i2)) return false;
      auto join = image.find(v1 | v2);
      auto meet = image.find(v1 & v2);
      if (join == image.end() || meet == image.end()) return false;
      if (meet->second != (i1 & i2)) return false;
      if (join->second != (i1 | i2)) return false;
    }
  return true;
}

UltraResult ultracharacters(const SemilatticeSpectrum& spec) {
  int nc = spec.characters();
  SubSet ultra(nc);
  for (int c = 0; c < nc; ++c) {
    bool maximal = true;
    for (int d = 0; d < nc && maximal; ++d)
      if (d != c && spec.character[c].subset_of(spec.character[d])) maximal = false;
    if (maximal) ultra.set(c);
  }
  return UltraResult{ultra, spec.space.closure(ultra)};
}

}  // namespace iscp::topo
