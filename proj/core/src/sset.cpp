#include "smc/sset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "smc/error.hpp"

namespace smc {

// ---- monotone maps --------------------------------------------------------

std::vector<Monotone> monotone_maps(int m, int n) {
  std::vector<Monotone> out;
  if (m < 0 || n < 0) return out;
  Monotone cur(static_cast<std::size_t>(m + 1), 0);
  // Odometer over non-decreasing sequences, lexicographic.
  while (true) {
    out.push_back(cur);
    int pos = m;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    const int v = cur[static_cast<std::size_t>(pos)] + 1;
    for (int q = pos; q <= m; ++q) cur[static_cast<std::size_t>(q)] = v;
  }
  return out;
}

std::vector<Monotone> injective_maps(int m, int n) {
  std::vector<Monotone> out;
  for (auto& f : monotone_maps(m, n))
    if (is_injective(f)) out.push_back(std::move(f));
  return out;
}

Monotone compose(const Monotone& g, const Monotone& f) {
  Monotone h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) h[i] = g.at(static_cast<std::size_t>(f[i]));
  return h;
}

bool is_injective(const Monotone& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f[i] == f[i - 1]) return false;
  return true;
}

bool is_surjective(const Monotone& f, int n) {
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : f) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Monotone coface(int n, int i) {
  Monotone f;
  for (int x = 0; x <= n - 1; ++x) f.push_back(x < i ? x : x + 1);
  return f;
}

Monotone codegeneracy(int n, int j) {
  Monotone f;
  for (int x = 0; x <= n + 1; ++x) f.push_back(x <= j ? x : x - 1);
  return f;
}

std::string label(const Monotone& f) {
  std::string s;
  for (int v : f) s += std::to_string(v) + (f.size() > 1 && v > 9 ? "," : "");
  return s;
}

OperatorWord operator_word(const Monotone& theta, int n) {
  OperatorWord w;
  // Mono part: values present in the image, relabelled to [k].
  std::vector<int> image(theta.begin(), theta.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> eta = image;  // η : [k] -> [n]
  int top = n;
  while (static_cast<int>(eta.size()) < top + 1) {
    // Largest value of [top] missing from η.
    int missing = top;
    for (int v = top; v >= 0; --v) {
      if (!std::binary_search(eta.begin(), eta.end(), v)) {
        missing = v;
        break;
      }
    }
    w.faces.push_back(missing);
    for (auto& v : eta)
      if (v > missing) --v;
    --top;
  }
  // Epi part ε : [m] -> [k], ε(x) = position of θ(x) in the image.
  std::vector<int> eps;
  for (int v : theta)
    eps.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
  std::vector<int> outer_first;
  while (!is_injective(eps)) {
    std::size_t j = 0;
    while (eps[j] != eps[j + 1]) ++j;
    outer_first.push_back(static_cast<int>(j));
    eps.erase(eps.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  w.degeneracies.assign(outer_first.rbegin(), outer_first.rend());
  return w;
}

// ---- FinSimplicialSet --------------------------------------------------------

FinSimplicialSet::FinSimplicialSet(int truncation, std::vector<std::vector<std::string>> labels,
                                   std::vector<std::vector<std::vector<std::size_t>>> faces,
                                   std::vector<std::vector<std::vector<std::size_t>>> degeneracies)
    : truncation_(truncation),
      labels_(std::move(labels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  const auto levels = static_cast<std::size_t>(truncation_ + 1);
  if (truncation_ < 0) throw InvalidInput("FinSimplicialSet: negative truncation");
  if (labels_.size() != levels) throw ShapeError("FinSimplicialSet: expected N+1 label levels");
  if (faces_.size() != levels) throw ShapeError("FinSimplicialSet: expected N+1 face levels");
  if (degeneracies_.size() != levels) throw ShapeError("FinSimplicialSet: expected N+1 degeneracy levels");
  for (int n = 0; n <= truncation_; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const std::size_t nf = n == 0 ? 0 : un + 1;
    if (faces_[un].size() != nf) throw ShapeError("FinSimplicialSet: wrong face count at level " + std::to_string(n));
    for (const auto& op : faces_[un]) {
      if (op.size() != labels_[un].size()) throw ShapeError("FinSimplicialSet: face table size at level " + std::to_string(n));
      for (auto y : op)
        if (y >= labels_[un - 1].size()) throw ShapeError("FinSimplicialSet: face index out of range at level " + std::to_string(n));
    }
    const std::size_t nd = n == truncation_ ? 0 : un + 1;
    if (degeneracies_[un].size() != nd) throw ShapeError("FinSimplicialSet: wrong degeneracy count at level " + std::to_string(n));
    for (const auto& op : degeneracies_[un]) {
      if (op.size() != labels_[un].size()) throw ShapeError("FinSimplicialSet: degeneracy table size at level " + std::to_string(n));
      for (auto y : op)
        if (y >= labels_[un + 1].size()) throw ShapeError("FinSimplicialSet: degeneracy index out of range at level " + std::to_string(n));
    }
  }
}

std::size_t FinSimplicialSet::face(int n, int i, std::size_t x) const {
  return faces_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(x);
}

std::size_t FinSimplicialSet::degeneracy(int n, int i, std::size_t x) const {
  return degeneracies_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)).at(x);
}

std::size_t FinSimplicialSet::apply(const Monotone& theta, int n, std::size_t x) const {
  const OperatorWord w = operator_word(theta, n);
  int level = n;
  for (int i : w.faces) x = face(level--, i, x);
  for (int j : w.degeneracies) x = degeneracy(level++, j, x);
  return x;
}

bool FinSimplicialSet::is_degenerate(int n, std::size_t x) const {
  for (int i = 0; i < n; ++i)
    if (degeneracy(n - 1, i, face(n, i, x)) == x) return true;
  return false;
}

std::vector<std::size_t> FinSimplicialSet::nondegenerate(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(n); ++x)
    if (!is_degenerate(n, x)) out.push_back(x);
  return out;
}

int FinSimplicialSet::dimension() const {
  for (int n = truncation_; n >= 0; --n)
    if (!nondegenerate(n).empty()) return n;
  return -1;
}

FinSimplicialSet::Decomposition FinSimplicialSet::decompose(int n, std::size_t x) const {
  std::vector<int> outer_first;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < n; ++i) {
      const std::size_t y = face(n, i, x);
      if (degeneracy(n - 1, i, y) == x) {
        outer_first.push_back(i);
        x = y;
        --n;
        again = true;
        break;
      }
    }
  }
  return {n, x, std::vector<int>(outer_first.rbegin(), outer_first.rend())};
}

std::optional<std::size_t> FinSimplicialSet::find(int n, const std::string& l) const {
  const auto& ls = labels(n);
  auto it = std::find(ls.begin(), ls.end(), l);
  if (it == ls.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ls.begin());
}

// ---- maps -------------------------------------------------------------------

SSetMap::SSetMap(FinSimplicialSet source, FinSimplicialSet target,
                 std::vector<std::vector<std::size_t>> levels, WeakEquivalence we)
    : source_(std::move(source)), target_(std::move(target)), levels_(std::move(levels)), we_(we) {
  if (source_.truncation() != target_.truncation()) throw ShapeError("SSetMap: truncation mismatch");
  if (levels_.size() != static_cast<std::size_t>(source_.truncation() + 1)) {
    throw ShapeError("SSetMap: expected N+1 levels");
  }
  for (int n = 0; n <= source_.truncation(); ++n) {
    const auto& lv = levels_[static_cast<std::size_t>(n)];
    if (lv.size() != source_.size(n)) throw ShapeError("SSetMap: level " + std::to_string(n) + " has wrong size");
    std::set<std::size_t> seen;
    for (auto y : lv) {
      if (y >= target_.size(n)) throw ShapeError("SSetMap: index out of range at level " + std::to_string(n));
      if (!seen.insert(y).second) injective_ = false;
    }
  }
}

SSetMap SSetMap::identity(const FinSimplicialSet& k) {
  std::vector<std::vector<std::size_t>> lv;
  for (int n = 0; n <= k.truncation(); ++n) {
    lv.emplace_back(k.size(n));
    for (std::size_t x = 0; x < k.size(n); ++x) lv.back()[x] = x;
  }
  return SSetMap(k, k, std::move(lv), WeakEquivalence::yes);
}

SSetMap SSetMap::with_weak_equivalence(WeakEquivalence we) const {
  SSetMap m = *this;
  m.we_ = we;
  return m;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  if (!(f.target() == g.source())) throw ShapeError("compose: SSetMap endpoints differ");
  std::vector<std::vector<std::size_t>> lv;
  for (int n = 0; n <= f.source().truncation(); ++n) {
    lv.emplace_back();
    for (std::size_t x = 0; x < f.source().size(n); ++x) lv.back().push_back(g(n, f(n, x)));
  }
  WeakEquivalence we = WeakEquivalence::unknown;
  if (f.weak_equivalence() == WeakEquivalence::yes && g.weak_equivalence() == WeakEquivalence::yes) {
    we = WeakEquivalence::yes;
  }
  return SSetMap(f.source(), g.target(), std::move(lv), we);
}

// ---- standard simplicial sets --------------------------------------------------

namespace {

/// Simplicial set whose level-m simplices are the given monotone maps into [n]
/// (closed under precomposition with cofaces/codegeneracies).
FinSimplicialSet from_monotone(int n, int truncation,
                               const std::function<bool(const Monotone&)>& keep) {
  std::vector<std::vector<Monotone>> simp;
  std::vector<std::map<Monotone, std::size_t>> index;
  for (int m = 0; m <= truncation; ++m) {
    simp.emplace_back();
    index.emplace_back();
    for (auto& a : monotone_maps(m, n)) {
      if (!keep(a)) continue;
      index.back()[a] = simp.back().size();
      simp.back().push_back(std::move(a));
    }
  }
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::size_t>>> faces(static_cast<std::size_t>(truncation + 1));
  std::vector<std::vector<std::vector<std::size_t>>> degens(static_cast<std::size_t>(truncation + 1));
  for (int m = 0; m <= truncation; ++m) {
    const auto um = static_cast<std::size_t>(m);
    labels.emplace_back();
    for (const auto& a : simp[um]) labels.back().push_back(label(a));
    if (m >= 1) {
      for (int i = 0; i <= m; ++i) {
        std::vector<std::size_t> op;
        for (const auto& a : simp[um]) op.push_back(index[um - 1].at(compose(a, coface(m, i))));
        faces[um].push_back(std::move(op));
      }
    }
    if (m < truncation) {
      for (int j = 0; j <= m; ++j) {
        std::vector<std::size_t> op;
        for (const auto& a : simp[um]) op.push_back(index[um + 1].at(compose(a, codegeneracy(m, j))));
        degens[um].push_back(std::move(op));
      }
    }
  }
  return FinSimplicialSet(truncation, std::move(labels), std::move(faces), std::move(degens));
}

bool omits_other_than(const Monotone& a, int n, int k) {
  std::vector<bool> hit(static_cast<std::size_t>(n + 1), false);
  for (int v : a) hit[static_cast<std::size_t>(v)] = true;
  for (int j = 0; j <= n; ++j)
    if (j != k && !hit[static_cast<std::size_t>(j)]) return true;
  return false;
}

SSetMap inclusion_by_label(const FinSimplicialSet& sub, const FinSimplicialSet& whole,
                           WeakEquivalence we) {
  std::vector<std::vector<std::size_t>> lv;
  for (int m = 0; m <= sub.truncation(); ++m) {
    lv.emplace_back();
    for (const auto& l : sub.labels(m)) lv.back().push_back(*whole.find(m, l));
  }
  return SSetMap(sub, whole, std::move(lv), we);
}

}  // namespace

FinSimplicialSet build_standard(StandardKind kind, int n, int truncation, int k) {
  if (n < 0 || truncation < 0) throw InvalidInput("build_standard: n and N must be >= 0");
  switch (kind) {
    case StandardKind::simplex:
      return from_monotone(n, truncation, [](const Monotone&) { return true; });
    case StandardKind::boundary:
      return from_monotone(n, truncation, [n](const Monotone& a) { return !is_surjective(a, n); });
    case StandardKind::horn:
      if (k < 0 || k > n) throw InvalidInput("build_standard: horn index k outside [0, n]");
      return from_monotone(n, truncation, [n, k](const Monotone& a) { return omits_other_than(a, n, k); });
  }
  throw InvalidInput("build_standard: unknown kind");
}

FinSimplicialSet standard_simplex(int n, int truncation) {
  return build_standard(StandardKind::simplex, n, truncation);
}
FinSimplicialSet boundary(int n, int truncation) {
  return build_standard(StandardKind::boundary, n, truncation);
}
FinSimplicialSet horn(int n, int k, int truncation) {
  return build_standard(StandardKind::horn, n, truncation, k);
}

FinSimplicialSet empty_sset(int truncation) {
  const auto levels = static_cast<std::size_t>(truncation + 1);
  std::vector<std::vector<std::vector<std::size_t>>> faces(levels), degens(levels);
  for (int n = 0; n <= truncation; ++n) {
    if (n >= 1) faces[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), {});
    if (n < truncation) degens[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), {});
  }
  return FinSimplicialSet(truncation, std::vector<std::vector<std::string>>(levels), std::move(faces),
                          std::move(degens));
}

SSetMap boundary_inclusion(int n, int truncation) {
  return inclusion_by_label(boundary(n, truncation), standard_simplex(n, truncation), WeakEquivalence::no);
}

SSetMap horn_inclusion(int n, int k, int truncation) {
  if (n < 1) throw InvalidInput("horn_inclusion: n must be >= 1");
  return inclusion_by_label(horn(n, k, truncation), standard_simplex(n, truncation), WeakEquivalence::yes);
}

SSetMap simplex_map(const Monotone& theta, int n, int truncation) {
  const int m = static_cast<int>(theta.size()) - 1;
  const FinSimplicialSet src = standard_simplex(m, truncation);
  const FinSimplicialSet tgt = standard_simplex(n, truncation);
  std::vector<std::vector<std::size_t>> lv;
  for (int k = 0; k <= truncation; ++k) {
    lv.emplace_back();
    const auto maps = monotone_maps(k, m);
    for (const auto& a : maps) lv.back().push_back(*tgt.find(k, label(compose(theta, a))));
  }
  return SSetMap(src, tgt, std::move(lv), WeakEquivalence::yes);
}

SSetMap face_inclusion(int m, int i, int truncation) {
  if (i < 0 || i > m + 1) throw InvalidInput("face_inclusion: i outside [0, m+1]");
  return simplex_map(coface(m + 1, i), m + 1, truncation);
}

SSetMap from_empty(const FinSimplicialSet& k) {
  return SSetMap(empty_sset(k.truncation()), k,
                 std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(k.truncation() + 1)),
                 WeakEquivalence::unknown);
}

SSetMap subobject(const FinSimplicialSet& k, const std::function<bool(int, std::size_t)>& keep) {
  const int N = k.truncation();
  std::vector<std::vector<std::size_t>> kept(static_cast<std::size_t>(N + 1));
  std::vector<std::vector<std::ptrdiff_t>> slot(static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    slot[un].assign(k.size(n), -1);
    for (std::size_t x = 0; x < k.size(n); ++x) {
      if (!keep(n, x)) continue;
      slot[un][x] = static_cast<std::ptrdiff_t>(kept[un].size());
      kept[un].push_back(x);
    }
  }
  auto at = [&](int n, std::size_t x) {
    const auto s = slot[static_cast<std::size_t>(n)][x];
    if (s < 0) throw InvalidInput("subobject: selection not closed under simplicial operators");
    return static_cast<std::size_t>(s);
  };
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::size_t>>> faces(static_cast<std::size_t>(N + 1));
  std::vector<std::vector<std::vector<std::size_t>>> degens(static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    labels.emplace_back();
    for (auto x : kept[un]) labels.back().push_back(k.labels(n)[x]);
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) {
        faces[un].emplace_back();
        for (auto x : kept[un]) faces[un].back().push_back(at(n - 1, k.face(n, i, x)));
      }
    }
    if (n < N) {
      for (int i = 0; i <= n; ++i) {
        degens[un].emplace_back();
        for (auto x : kept[un]) degens[un].back().push_back(at(n + 1, k.degeneracy(n, i, x)));
      }
    }
  }
  FinSimplicialSet sub(N, std::move(labels), std::move(faces), std::move(degens));
  return SSetMap(sub, k, std::move(kept));
}

// ---- validation -------------------------------------------------------------

Report validate_sset(const FinSimplicialSet& k) {
  const int N = k.truncation();
  auto where = [](const char* id, int n, int i, int j, std::size_t x) {
    return std::string(id) + " fails at n=" + std::to_string(n) + " i=" + std::to_string(i) +
           " j=" + std::to_string(j) + " simplex=" + std::to_string(x);
  };
  for (int n = 0; n <= N; ++n) {
    for (std::size_t x = 0; x < k.size(n); ++x) {
      // d_i d_j = d_{j-1} d_i, i < j
      if (n >= 2) {
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (k.face(n - 1, i, k.face(n, j, x)) != k.face(n - 1, j - 1, k.face(n, i, x)))
              return Report::fail(where("d_i d_j = d_{j-1} d_i", n, i, j, x));
      }
      // s_i s_j = s_{j+1} s_i, i <= j
      if (n + 2 <= N) {
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (k.degeneracy(n + 1, i, k.degeneracy(n, j, x)) !=
                k.degeneracy(n + 1, j + 1, k.degeneracy(n, i, x)))
              return Report::fail(where("s_i s_j = s_{j+1} s_i", n, i, j, x));
      }
      // mixed identities on s_j x, level n+1
      if (n + 1 <= N) {
        for (int j = 0; j <= n; ++j) {
          const std::size_t sx = k.degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            const std::size_t lhs = k.face(n + 1, i, sx);
            std::size_t rhs;
            if (i < j) {
              rhs = k.degeneracy(n - 1, j - 1, k.face(n, i, x));
            } else if (i == j || i == j + 1) {
              rhs = x;
            } else {
              rhs = k.degeneracy(n - 1, j, k.face(n, i - 1, x));
            }
            if (lhs != rhs) return Report::fail(where("d_i s_j", n + 1, i, j, x));
          }
        }
      }
    }
  }
  return Report::pass();
}

Report validate_sset_map(const SSetMap& f) {
  if (auto r = validate_sset(f.source()); !r) return Report::fail("source: " + r.where);
  if (auto r = validate_sset(f.target()); !r) return Report::fail("target: " + r.where);
  const int N = f.source().truncation();
  for (int n = 0; n <= N; ++n) {
    for (std::size_t x = 0; x < f.source().size(n); ++x) {
      for (int i = 0; n >= 1 && i <= n; ++i)
        if (f(n - 1, f.source().face(n, i, x)) != f.target().face(n, i, f(n, x)))
          return Report::fail("map does not commute with d_" + std::to_string(i) + " at level " + std::to_string(n));
      for (int i = 0; n < N && i <= n; ++i)
        if (f(n + 1, f.source().degeneracy(n, i, x)) != f.target().degeneracy(n, i, f(n, x)))
          return Report::fail("map does not commute with s_" + std::to_string(i) + " at level " + std::to_string(n));
    }
  }
  return Report::pass();
}

// ---- products -----------------------------------------------------------------

FinSimplicialSet product(const FinSimplicialSet& k, const FinSimplicialSet& l) {
  if (k.truncation() != l.truncation()) throw ShapeError("product: truncation mismatch");
  const int N = k.truncation();
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<std::size_t>>> faces(static_cast<std::size_t>(N + 1));
  std::vector<std::vector<std::vector<std::size_t>>> degens(static_cast<std::size_t>(N + 1));
  auto idx = [&](int n, std::size_t a, std::size_t b) { return a * l.size(n) + b; };
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    labels.emplace_back();
    for (std::size_t a = 0; a < k.size(n); ++a)
      for (std::size_t b = 0; b < l.size(n); ++b)
        labels.back().push_back("(" + k.labels(n)[a] + "," + l.labels(n)[b] + ")");
    for (int i = 0; n >= 1 && i <= n; ++i) {
      faces[un].emplace_back();
      for (std::size_t a = 0; a < k.size(n); ++a)
        for (std::size_t b = 0; b < l.size(n); ++b)
          faces[un].back().push_back(idx(n - 1, k.face(n, i, a), l.face(n, i, b)));
    }
    for (int i = 0; n < N && i <= n; ++i) {
      degens[un].emplace_back();
      for (std::size_t a = 0; a < k.size(n); ++a)
        for (std::size_t b = 0; b < l.size(n); ++b)
          degens[un].back().push_back(idx(n + 1, k.degeneracy(n, i, a), l.degeneracy(n, i, b)));
    }
  }
  return FinSimplicialSet(N, std::move(labels), std::move(faces), std::move(degens));
}

SSetMap product(const SSetMap& f, const SSetMap& g) {
  const FinSimplicialSet src = product(f.source(), g.source());
  const FinSimplicialSet tgt = product(f.target(), g.target());
  std::vector<std::vector<std::size_t>> lv;
  for (int n = 0; n <= src.truncation(); ++n) {
    lv.emplace_back();
    for (std::size_t a = 0; a < f.source().size(n); ++a)
      for (std::size_t b = 0; b < g.source().size(n); ++b)
        lv.back().push_back(f(n, a) * g.target().size(n) + g(n, b));
  }
  return SSetMap(src, tgt, std::move(lv));
}

SSetMap sset_pushout_product(const SSetMap& f, const SSetMap& g) {
  if (!f.injective() || !g.injective()) throw InvalidInput("sset_pushout_product: inputs must be injective");
  const FinSimplicialSet tgt = product(f.target(), g.target());
  const int N = tgt.truncation();
  std::vector<std::vector<bool>> in_f(static_cast<std::size_t>(N + 1)), in_g(static_cast<std::size_t>(N + 1));
  for (int n = 0; n <= N; ++n) {
    in_f[static_cast<std::size_t>(n)].assign(f.target().size(n), false);
    in_g[static_cast<std::size_t>(n)].assign(g.target().size(n), false);
    for (auto y : f.levels()[static_cast<std::size_t>(n)]) in_f[static_cast<std::size_t>(n)][y] = true;
    for (auto y : g.levels()[static_cast<std::size_t>(n)]) in_g[static_cast<std::size_t>(n)][y] = true;
  }
  SSetMap inc = subobject(tgt, [&](int n, std::size_t x) {
    const std::size_t w = g.target().size(n);
    return in_f[static_cast<std::size_t>(n)][x / w] || in_g[static_cast<std::size_t>(n)][x % w];
  });
  const bool trivial = f.weak_equivalence() == WeakEquivalence::yes ||
                       g.weak_equivalence() == WeakEquivalence::yes;
  return inc.with_weak_equivalence(trivial ? WeakEquivalence::yes : WeakEquivalence::unknown);
}

// ---- chains -------------------------------------------------------------------

ChainComplex normalized_chains(const FinSimplicialSet& k, Field f) {
  const int N = k.truncation();
  std::vector<std::vector<std::size_t>> nd;
  std::vector<std::vector<std::ptrdiff_t>> pos;
  for (int n = 0; n <= N; ++n) {
    nd.push_back(k.nondegenerate(n));
    pos.emplace_back(k.size(n), -1);
    for (std::size_t c = 0; c < nd.back().size(); ++c) pos.back()[nd.back()[c]] = static_cast<std::ptrdiff_t>(c);
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = 0; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    dims.push_back(nd[un].size());
    Matrix d(n == 0 ? 0 : nd[un - 1].size(), nd[un].size(), f);
    for (std::size_t c = 0; n >= 1 && c < nd[un].size(); ++c) {
      for (int i = 0; i <= n; ++i) {
        const auto r = pos[un - 1][k.face(n, i, nd[un][c])];
        if (r < 0) continue;
        const auto ur = static_cast<std::size_t>(r);
        d.at(ur, c) = (i % 2 == 0) ? f.add(d(ur, c), 1) : f.sub(d(ur, c), 1);
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(f, 0, std::move(dims), std::move(diffs));
}

ChainMap normalized_chains(const SSetMap& g, Field f) {
  const ChainComplex src = normalized_chains(g.source(), f);
  const ChainComplex tgt = normalized_chains(g.target(), f);
  return ChainMap::from_fn(src, tgt, [&](int n) {
    Matrix m(tgt.dim(n), src.dim(n), f);
    if (m.size() == 0) return m;
    const auto snd = g.source().nondegenerate(n);
    const auto tnd = g.target().nondegenerate(n);
    for (std::size_t c = 0; c < snd.size(); ++c) {
      auto it = std::find(tnd.begin(), tnd.end(), g(n, snd[c]));
      if (it != tnd.end()) m.at(static_cast<std::size_t>(it - tnd.begin()), c) = 1;
    }
    return m;
  });
}

ChainComplex simplex_chains(int n, Field f) {
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  std::vector<std::vector<Monotone>> basis;
  for (int m = 0; m <= n; ++m) basis.push_back(injective_maps(m, n));
  for (int m = 0; m <= n; ++m) {
    const auto um = static_cast<std::size_t>(m);
    dims.push_back(basis[um].size());
    Matrix d(m == 0 ? 0 : basis[um - 1].size(), basis[um].size(), f);
    for (std::size_t c = 0; m >= 1 && c < basis[um].size(); ++c) {
      for (int i = 0; i <= m; ++i) {
        const Monotone face = compose(basis[um][c], coface(m, i));
        const auto r = static_cast<std::size_t>(
            std::lower_bound(basis[um - 1].begin(), basis[um - 1].end(), face) - basis[um - 1].begin());
        d.at(r, c) = (i % 2 == 0) ? f.add(d(r, c), 1) : f.sub(d(r, c), 1);
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(f, 0, std::move(dims), std::move(diffs));
}

ChainMap simplex_chain_map(const Monotone& theta, int n, Field f) {
  const int m = static_cast<int>(theta.size()) - 1;
  const ChainComplex src = simplex_chains(m, f);
  const ChainComplex tgt = simplex_chains(n, f);
  return ChainMap::from_fn(src, tgt, [&](int k) {
    Matrix mat(tgt.dim(k), src.dim(k), f);
    if (mat.size() == 0) return mat;
    const auto sb = injective_maps(k, m);
    const auto tb = injective_maps(k, n);
    for (std::size_t c = 0; c < sb.size(); ++c) {
      const Monotone img = compose(theta, sb[c]);
      if (!is_injective(img)) continue;
      mat.at(static_cast<std::size_t>(std::lower_bound(tb.begin(), tb.end(), img) - tb.begin()), c) = 1;
    }
    return mat;
  });
}

}  // namespace smc
