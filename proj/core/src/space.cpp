#include "connective/space.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace connective {

namespace {

void check_family(int n, const Family& fam) {
  check_points(n);
  for (Subset s : fam)
    if (!is_subset(s, full_set(n))) throw InputError("subset index out of range for support of size " + std::to_string(n));
}

void check_map(const PointMap& f, int source, int target) {
  if (static_cast<int>(f.size()) != source)
    throw InputError("point map has " + std::to_string(f.size()) + " entries, expected " + std::to_string(source));
  for (int v : f)
    if (v < 0 || v >= target) throw InputError("point map value out of range: " + std::to_string(v));
}

// Packs the bits of s lying inside a down to positions 0..|a|-1.
Subset compress(Subset s, Subset a) {
  Subset out = 0;
  int k = 0;
  for (int p : points_of(a)) {
    if (has(s, p)) out |= singleton(k);
    ++k;
  }
  return out;
}

void require_enumerable(int n, const char* what) {
  if (n > kMaxEnumeratedPoints)
    throw CapacityError(std::string(what) + ": enumeration over " + std::to_string(n) + " points exceeds limit");
}

void add_submasks(Subset whole, std::vector<Subset>& out) {
  for (Subset s = whole;; s = (s - 1) & whole) {
    out.push_back(s);
    if (s == 0) break;
  }
}

}  // namespace

bool validate_structure(int n, const Family& fam) {
  check_family(n, fam);
  if (!fam.contains(kEmpty)) return false;
  const auto& xs = fam.items();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (meets(xs[i], xs[j]) && !fam.contains(xs[i] | xs[j])) return false;
  return true;
}

Family generate(int n, const Family& fam, bool integral) {
  check_family(n, fam);
  std::vector<Subset> members;
  std::unordered_set<Subset> seen;
  auto add = [&](Subset s) {
    if (seen.insert(s).second) members.push_back(s);
  };
  add(kEmpty);
  if (integral)
    for (int i = 0; i < n; ++i) add(singleton(i));
  for (Subset s : fam) add(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (meets(members[i], members[j])) add(members[i] | members[j]);
  return Family(std::move(members));
}

Space::Space(int n, Family connected) : n_(n), connected_(std::move(connected)) {
  if (!validate_structure(n_, connected_)) throw InputError("family is not a connectivity structure");
}

Space trusted_space(int n, Family connected) { return Space(n, std::move(connected), Space::Trusted{}); }

Space Space::desintegrated(int n) {
  check_points(n);
  return trusted_space(n, Family{kEmpty});
}

Space Space::discrete(int n) {
  check_points(n);
  std::vector<Subset> xs{kEmpty};
  for (int i = 0; i < n; ++i) xs.push_back(singleton(i));
  return trusted_space(n, Family(std::move(xs)));
}

Space Space::grossier(int n) {
  check_points(n);
  require_enumerable(n, "grossier structure");
  std::vector<Subset> xs;
  add_submasks(full_set(n), xs);
  return trusted_space(n, Family(std::move(xs)));
}

bool Space::is_integral() const {
  for (int i = 0; i < n_; ++i)
    if (!connected_.contains(singleton(i))) return false;
  return true;
}

Components connected_components(const Space& sp) {
  Components out;
  Subset covered = 0;
  for (int p = 0; p < sp.size(); ++p) {
    if (has(covered, p)) continue;
    Subset comp = 0;
    for (Subset k : sp.connected())
      if (has(k, p)) comp |= k;
    if (comp) {
      out.components.push_back(comp);
      covered |= comp;
    }
  }
  out.absent = sp.support() & ~covered;
  return out;
}

Space induced(const Space& sp, Subset a) {
  if (!is_subset(a, sp.support())) throw InputError("induced: subset outside support");
  std::vector<Subset> xs;
  for (Subset k : sp.connected())
    if (is_subset(k, a)) xs.push_back(compress(k, a));
  return trusted_space(cardinality(a), Family(std::move(xs)));
}

Subset image(const PointMap& f, Subset s) {
  Subset out = 0;
  for (int p : points_of(s)) out |= singleton(f[p]);
  return out;
}

Space initial_structure(const PointMap& f, const Space& target, int n) {
  check_points(n);
  check_map(f, n, target.size());
  std::vector<Subset> fiber(target.size(), 0);
  for (int x = 0; x < n; ++x) fiber[f[x]] |= singleton(x);

  // A has image L exactly when A meets every fiber over L and lies in their union.
  constexpr double kLimit = double(1 << 22);
  double total = 0;
  for (Subset l : target.connected()) {
    double count = 1;
    for (int y : points_of(l)) count *= double((Subset{1} << cardinality(fiber[y])) - 1);
    total += count;
  }
  if (total > kLimit) throw CapacityError("initial structure would exceed 2^22 connected parts");

  std::vector<Subset> xs;
  for (Subset l : target.connected()) {
    std::vector<Subset> partial{0};
    for (int y : points_of(l)) {
      std::vector<Subset> next;
      for (Subset base : partial)
        for (Subset s = fiber[y]; s; s = (s - 1) & fiber[y]) next.push_back(base | s);
      partial = std::move(next);
    }
    xs.insert(xs.end(), partial.begin(), partial.end());
  }
  return trusted_space(n, Family(std::move(xs)));
}

Space final_structure(const PointMap& f, const Space& source, int m, bool integral) {
  check_points(m);
  check_map(f, source.size(), m);
  std::vector<Subset> xs;
  for (Subset k : source.connected()) xs.push_back(image(f, k));
  return trusted_space(m, generate(m, Family(std::move(xs)), integral));
}

PartialEquiv::PartialEquiv(int n, std::vector<Subset> classes) : n_(n), classes_(std::move(classes)) {
  check_points(n);
  Subset seen = 0;
  for (Subset c : classes_) {
    if (c == 0) throw InputError("empty equivalence class");
    if (!is_subset(c, full_set(n))) throw InputError("equivalence class outside support");
    if (meets(c, seen)) throw InputError("equivalence classes overlap");
    seen |= c;
  }
  std::sort(classes_.begin(), classes_.end(), [](Subset a, Subset b) { return least_point(a) < least_point(b); });
}

Subset PartialEquiv::present() const {
  Subset u = 0;
  for (Subset c : classes_) u |= c;
  return u;
}

int PartialEquiv::class_of(int p) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (has(classes_[i], p)) return static_cast<int>(i);
  return -1;
}

PointMap PartialEquiv::projection() const {
  PointMap f(n_, -1);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (int p : points_of(classes_[i])) f[p] = static_cast<int>(i);
  return f;
}

Space quotient(const Space& sp, const PartialEquiv& eq) {
  if (eq.size() != sp.size()) throw InputError("quotient: support size mismatch");
  if (!eq.is_total()) throw InputError("quotient: classes do not cover the support");
  return final_structure(eq.projection(), sp, static_cast<int>(eq.classes().size()), false);
}

Space quotient_partial(const Space& sp, const PartialEquiv& pe) {
  if (pe.size() != sp.size()) throw InputError("quotient: support size mismatch");
  Subset present = pe.present();
  std::vector<Subset> restricted;
  for (Subset c : pe.classes()) restricted.push_back(compress(c, present));
  return quotient(induced(sp, present), PartialEquiv(cardinality(present), std::move(restricted)));
}

Space structural_quotient(const Space& sp, const PartialEquiv& eq) {
  Space q = quotient(sp, eq);
  return initial_structure(eq.projection(), q, sp.size());
}

Space saturate(const Space& sp) {
  std::vector<Subset> xs{kEmpty};
  for (Subset c : connected_components(sp).components) {
    require_enumerable(cardinality(c), "saturate");
    add_submasks(c, xs);
  }
  return trusted_space(sp.size(), Family(std::move(xs)));
}

PartialEquiv pe_of_structure(const Space& sp) { return PartialEquiv(sp.size(), connected_components(sp).components); }

Space space_from_partial_equiv(int n, const PartialEquiv& pe) {
  if (pe.size() != n) throw InputError("partial equivalence over a different support");
  std::vector<Subset> xs{kEmpty};
  for (Subset c : pe.classes()) {
    require_enumerable(cardinality(c), "space_from_partial_equiv");
    add_submasks(c, xs);
  }
  return trusted_space(n, Family(std::move(xs)));
}

SeparationDevice::SeparationDevice(int n, std::vector<SeparatingPair> pairs) : n_(n) {
  check_points(n);
  for (auto p : pairs) {
    if (p.first == 0 || p.second == 0) throw InputError("separating pair with an empty side");
    if (meets(p.first, p.second)) throw InputError("separating pair with overlapping sides");
    if (!is_subset(p.first | p.second, full_set(n))) throw InputError("separating pair outside support");
    if (p.second < p.first) std::swap(p.first, p.second);
    pairs_.push_back(p);
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool separated(const SeparationDevice& dev, Subset a) {
  for (const auto& p : dev.pairs())
    if (is_subset(a, p.first | p.second) && meets(a, p.first) && meets(a, p.second)) return true;
  return false;
}

Space space_from_device(int n, const SeparationDevice& dev) {
  if (dev.size() != n) throw InputError("separation device over a different support");
  require_enumerable(n, "space_from_device");
  std::vector<Subset> xs;
  for (Subset s = 0; s <= full_set(n); ++s)
    if (!separated(dev, s)) xs.push_back(s);
  return trusted_space(n, Family(std::move(xs)));
}

SeparationDevice canonical_device(const Space& sp) {
  if (!sp.is_integral()) throw DomainError("canonical device requires an integral space");
  const int n = sp.size();
  if (n > 14) throw CapacityError("canonical device: enumeration over " + std::to_string(n) + " points exceeds limit");
  std::vector<SeparatingPair> pairs;
  std::vector<Subset> inside;
  for (Subset u = 1; u <= full_set(n); ++u) {
    if (cardinality(u) < 2) continue;
    inside.clear();
    for (Subset k : sp.connected())
      if (cardinality(k) >= 2 && is_subset(k, u)) inside.push_back(k);
    // The side holding the least point of u is the first; this lists each
    // unordered pair once.
    Subset anchor = singleton(least_point(u));
    Subset rest = u & ~anchor;
    for (Subset extra = rest;; extra = (extra - 1) & rest) {
      Subset a = anchor | extra;
      Subset b = u & ~a;
      if (b != 0) {
        bool ok = std::all_of(inside.begin(), inside.end(), [&](Subset k) { return is_subset(k, a) || is_subset(k, b); });
        if (ok) pairs.push_back({a, b});
      }
      if (extra == 0) break;
    }
  }
  return SeparationDevice(n, std::move(pairs));
}

Space lattice_meet(int n, std::span<const Space> spaces) {
  if (spaces.empty()) return Space::grossier(n);
  std::vector<Subset> xs;
  for (Subset k : spaces.front().connected()) {
    bool everywhere = std::all_of(spaces.begin(), spaces.end(), [&](const Space& s) {
      if (s.size() != n) throw InputError("lattice meet: support size mismatch");
      return s.is_connected(k);
    });
    if (everywhere) xs.push_back(k);
  }
  if (spaces.front().size() != n) throw InputError("lattice meet: support size mismatch");
  return trusted_space(n, Family(std::move(xs)));
}

Space lattice_join(int n, std::span<const Space> spaces, bool integral) {
  std::vector<Subset> xs;
  for (const Space& s : spaces) {
    if (s.size() != n) throw InputError("lattice join: support size mismatch");
    xs.insert(xs.end(), s.connected().begin(), s.connected().end());
  }
  return trusted_space(n, generate(n, Family(std::move(xs)), integral));
}

bool morphism_check(const PointMap& f, const Space& x, const Space& y) {
  check_map(f, x.size(), y.size());
  for (Subset k : x.connected())
    if (!y.is_connected(image(f, k))) return false;
  return true;
}

Space graph_to_space(int n, std::span<const std::pair<int, int>> edges) {
  check_points(n);
  std::vector<Subset> xs;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("edge endpoint out of range");
    xs.push_back(singleton(a) | singleton(b));
  }
  // A vertex set is graph-connected iff it is built by chaining intersecting edges.
  return trusted_space(n, generate(n, Family(std::move(xs)), true));
}

}  // namespace connective
