#include "gradering/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gradering {

namespace {

std::string default_label(int i) { return "g" + std::to_string(i); }

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> cayley,
                                    int identity_hint,
                                    std::vector<std::string> labels) {
  const int n = static_cast<int>(cayley.size());
  if (n == 0) fail("NotAGroup", "empty Cayley table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cayley[i].size()) != n)
      fail("NotAGroup", "Cayley table is not square");
    for (int j = 0; j < n; ++j) {
      if (cayley[i][j] < 0 || cayley[i][j] >= n)
        fail("NotAGroup", "Cayley entry out of range at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
    }
  }

  // Find the two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = cayley[e][a] == a && cayley[a][e] == a;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail("NotAGroup", "no two-sided identity element");
  if (identity_hint >= 0 && identity_hint != identity)
    fail("NotAGroup", "declared identity " + std::to_string(identity_hint) +
                          " is not the identity (actual: " +
                          std::to_string(identity) + ")");

  // Inverses: each row and column must be a permutation containing identity.
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (cayley[a][b] == identity && cayley[b][a] == identity) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0)
      fail("NotAGroup", "element " + std::to_string(a) +
                            " has no two-sided inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          fail("NotAGroup", "associativity fails at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");

  FiniteGroup g;
  g.cayley_ = std::move(cayley);
  g.inverse_ = std::move(inverse);
  g.identity_ = identity;
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(default_label(i));
  } else if (static_cast<int>(labels.size()) != n) {
    fail("NotAGroup", "label list length does not match group order");
  }
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) fail("NotAGroup", "cyclic group order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return from_table(std::move(table), 0, std::move(labels));
}

FiniteGroup FiniteGroup::product_of_cyclics(const std::vector<int>& ns) {
  if (ns.empty()) return trivial();
  long long order = 1;
  for (int m : ns) {
    if (m < 1) fail("NotAGroup", "cyclic factor order must be >= 1");
    order *= m;
  }
  const int n = static_cast<int>(order);
  const int k = static_cast<int>(ns.size());
  auto decode = [&](int idx) {
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = idx % ns[i];
      idx /= ns[i];
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * ns[i] + d[i];
    return idx;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    auto da = decode(a);
    std::ostringstream lbl;
    lbl << "(";
    for (int i = 0; i < k; ++i) lbl << (i ? "," : "") << da[i];
    lbl << ")";
    labels[a] = lbl.str();
    for (int b = 0; b < n; ++b) {
      auto db = decode(b);
      std::vector<int> dc(k);
      for (int i = 0; i < k; ++i) dc[i] = (da[i] + db[i]) % ns[i];
      table[a][b] = encode(dc);
    }
  }
  return from_table(std::move(table), 0, std::move(labels));
}

FiniteGroup FiniteGroup::named(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != ' ') s.push_back(c);
  if (s == "trivial" || s == "C1" || s == "1") return trivial();
  // "CnxCmx..." product form.
  std::vector<int> factors;
  std::size_t pos = 0;
  bool ok = !s.empty();
  while (ok && pos < s.size()) {
    if (s[pos] != 'C') {
      ok = false;
      break;
    }
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos) {
      ok = false;
      break;
    }
    factors.push_back(std::stoi(s.substr(start, pos - start)));
    if (pos < s.size()) {
      if (s[pos] != 'x') {
        ok = false;
        break;
      }
      ++pos;
      if (pos >= s.size()) ok = false;
    }
  }
  if (ok && !factors.empty()) {
    if (factors.size() == 1) return cyclic(factors[0]);
    return product_of_cyclics(factors);
  }
  if (s == "S3") {
    // Symmetric group on 3 letters; elements are the permutations of
    // {0,1,2} listed as e,(01),(02),(12),(012),(021).
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    const std::vector<std::string> labels = {"e",    "(01)",  "(02)",
                                             "(12)", "(012)", "(021)"};
    auto index_of = [&](const std::vector<int>& p) {
      for (std::size_t i = 0; i < perms.size(); ++i)
        if (perms[i] == p) return static_cast<int>(i);
      return -1;
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        // (ab)(x) = a(b(x)).
        std::vector<int> comp(3);
        for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
        table[a][b] = index_of(comp);
      }
    return from_table(std::move(table), 0, labels);
  }
  fail("NotAGroup", "unknown group name: " + name);
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

bool FiniteGroup::is_abelian() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (cayley_[a][b] != cayley_[b][a]) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int x = a;
  int k = 1;
  while (x != identity_) {
    x = cayley_[x][a];
    ++k;
  }
  return k;
}

bool FiniteGroup::is_p_group(int p) const {
  int n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::optional<int> FiniteGroup::p_group_prime() const {
  int n = order();
  if (n == 1) return std::nullopt;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return cayley_ == other.cayley_;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elements) const {
  if (elements.empty()) return false;
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(identity_)) return false;
  for (int a : s) {
    if (a < 0 || a >= order()) return false;
    if (!s.count(inverse_[a])) return false;
    for (int b : s)
      if (!s.count(cayley_[a][b])) return false;
  }
  return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<int>& elements) const {
  if (!is_subgroup(elements)) return false;
  std::set<int> s(elements.begin(), elements.end());
  for (int g = 0; g < order(); ++g)
    for (int h : s)
      if (!s.count(cayley_[cayley_[g][h]][inverse_[g]])) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::subgroups() const {
  const int n = order();
  // Closure of each subset of generators would be exponential; instead grow
  // subgroups by adding one generator at a time (standard lattice walk).
  // Group orders are capped (<= 64) so this is cheap.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  std::vector<int> triv = {identity_};
  found.insert(triv);
  frontier.push_back(triv);
  auto closure = [&](std::vector<int> gens) {
    std::set<int> s(gens.begin(), gens.end());
    s.insert(identity_);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(s.begin(), s.end());
      for (int a : cur)
        for (int b : cur) {
          if (s.insert(cayley_[a][b]).second) grew = true;
          if (s.insert(inverse_[a]).second) grew = true;
        }
    }
    return std::vector<int>(s.begin(), s.end());
  };
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& h : frontier) {
      for (int g = 0; g < n; ++g) {
        std::vector<int> gens = h;
        gens.push_back(g);
        auto k = closure(std::move(gens));
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

std::vector<std::vector<int>> FiniteGroup::normal_subgroups() const {
  std::vector<std::vector<int>> out;
  for (auto& h : subgroups())
    if (is_normal_subgroup(h)) out.push_back(h);
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& g,
                             const std::vector<int>& normal_subgroup) {
  if (!g.is_subgroup(normal_subgroup))
    fail("NotASubgroup", "coset subgroup is not a subgroup");
  if (!g.is_normal_subgroup(normal_subgroup))
    fail("NotNormal", "coset subgroup is not normal");
  const int n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : normal_subgroup) coset_of[g.op(a, h)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = g.label(reps[i]) + "H";
    for (int j = 0; j < q; ++j) table[i][j] = coset_of[g.op(reps[i], reps[j])];
  }
  QuotientGroup out{FiniteGroup::from_table(std::move(table),
                                            coset_of[g.identity()],
                                            std::move(labels)),
                    std::move(coset_of), std::move(reps)};
  return out;
}

}  // namespace gradering
