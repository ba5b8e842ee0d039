#include "gradering/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace gradering {

std::uint64_t Bitset::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return c;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Bitset Bitset::intersect(const Bitset& other) const {
  Bitset out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::vector<std::uint64_t> Bitset::to_indices() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < size_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

Bitset additive_closure(const FiniteRing& ring,
                        const std::vector<RingElement>& generators) {
  Bitset seen(ring.order());
  seen.set(ring.index_of(ring.zero()));
  std::deque<RingElement> queue;
  queue.push_back(ring.zero());
  while (!queue.empty()) {
    RingElement x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      RingElement y = ring.add(x, g);
      std::uint64_t idx = ring.index_of(y);
      if (!seen.test(idx)) {
        seen.set(idx);
        queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

std::vector<RingElement> subgroup_generators(const FiniteRing& ring,
                                             const Bitset& subgroup) {
  std::vector<RingElement> gens;
  Bitset closed(ring.order());
  closed.set(ring.index_of(ring.zero()));
  std::vector<RingElement> members;
  members.push_back(ring.zero());
  for (std::uint64_t i = 0; i < subgroup.size(); ++i) {
    if (!subgroup.test(i) || closed.test(i)) continue;
    RingElement g = ring.element_at(i);
    gens.push_back(g);
    // Extend the closure by the new generator: add multiples of g to every
    // current member.
    std::vector<RingElement> added;
    for (const auto& m : members) {
      RingElement x = ring.add(m, g);
      while (true) {
        std::uint64_t idx = ring.index_of(x);
        if (closed.test(idx)) break;
        closed.set(idx);
        added.push_back(x);
        x = ring.add(x, g);
      }
    }
    members.insert(members.end(), added.begin(), added.end());
  }
  return gens;
}

namespace {

void swap_rows(SmithResult& s, std::vector<std::vector<long long>>& A, int i,
               int j) {
  std::swap(A[i], A[j]);
  std::swap(s.U[i], s.U[j]);
  for (auto& row : s.U_inverse) std::swap(row[i], row[j]);
}

// row_i -= q * row_t
void add_row(SmithResult& s, std::vector<std::vector<long long>>& A, int i,
             int t, long long q) {
  for (std::size_t c = 0; c < A[i].size(); ++c) A[i][c] -= q * A[t][c];
  for (std::size_t c = 0; c < s.U[i].size(); ++c) s.U[i][c] -= q * s.U[t][c];
  for (auto& row : s.U_inverse) row[t] += q * row[i];
}

void negate_row(SmithResult& s, std::vector<std::vector<long long>>& A,
                int i) {
  for (auto& v : A[i]) v = -v;
  for (auto& v : s.U[i]) v = -v;
  for (auto& row : s.U_inverse) row[i] = -row[i];
}

}  // namespace

SmithResult smith_diagonalize(std::vector<std::vector<long long>> A) {
  const int rows = static_cast<int>(A.size());
  const int cols = rows > 0 ? static_cast<int>(A[0].size()) : 0;
  SmithResult s;
  s.U.assign(rows, std::vector<long long>(rows, 0));
  s.U_inverse.assign(rows, std::vector<long long>(rows, 0));
  for (int i = 0; i < rows; ++i) s.U[i][i] = s.U_inverse[i][i] = 1;

  auto swap_cols = [&](int i, int j) {
    for (auto& row : A) std::swap(row[i], row[j]);
  };
  auto add_col = [&](int j, int t, long long q) {  // col_j -= q * col_t
    for (auto& row : A) row[j] -= q * row[t];
  };

  const int lim = std::min(rows, cols);
  for (int t = 0; t < lim; ++t) {
    while (true) {
      // Minimal-absolute-value nonzero pivot in the remaining submatrix.
      int pr = -1, pc = -1;
      long long best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (A[i][j] != 0 &&
              (pr < 0 || std::llabs(A[i][j]) < best)) {
            pr = i;
            pc = j;
            best = std::llabs(A[i][j]);
          }
      if (pr < 0) break;  // submatrix is zero
      if (pr != t) swap_rows(s, A, t, pr);
      if (pc != t) swap_cols(t, pc);
      if (A[t][t] < 0) negate_row(s, A, t);

      bool dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (A[i][t] == 0) continue;
        long long q = A[i][t] / A[t][t];
        add_row(s, A, i, t, q);
        if (A[i][t] != 0) dirty = true;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (A[t][j] == 0) continue;
        long long q = A[t][j] / A[t][t];
        add_col(j, t, q);
        if (A[t][j] != 0) dirty = true;
      }
      if (!dirty) break;
    }
  }

  s.diagonal.assign(rows, 0);
  for (int i = 0; i < lim; ++i) s.diagonal[i] = A[i][i];
  return s;
}

QuotientRing quotient_by_ideal(const FiniteRing& ring, const Bitset& ideal) {
  if (ideal.size() != ring.order())
    fail("DimensionMismatch", "ideal bitmap size does not match ring order");
  if (!ideal.test(ring.index_of(ring.zero())))
    fail("NotHomogeneousIdeal", "ideal subset does not contain zero");

  const int k = ring.rank();
  std::vector<RingElement> gens = subgroup_generators(ring, ideal);

  // Relation matrix: one column per additive order relation m_i * e_i = 0,
  // then one column per ideal generator.
  const int cols = k + static_cast<int>(gens.size());
  std::vector<std::vector<long long>> A(k, std::vector<long long>(cols, 0));
  for (int i = 0; i < k; ++i) A[i][i] = ring.additive_orders()[i];
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < k; ++i) A[i][k + j] = gens[j][i];

  SmithResult snf = smith_diagonalize(std::move(A));
  // The diag(m) block makes the lattice full-rank, so every diagonal entry is
  // positive.
  std::vector<long long> d = snf.diagonal;
  for (long long v : d)
    if (v <= 0) fail("DimensionMismatch", "quotient lattice is not full rank");

  std::vector<int> kept;  // indices with d[i] > 1
  for (int i = 0; i < k; ++i)
    if (d[i] > 1) kept.push_back(i);

  auto project_coords = [&](const RingElement& x) {
    // U * x reduced mod d, restricted to kept coordinates.
    std::vector<int> q(kept.size());
    for (std::size_t a = 0; a < kept.size(); ++a) {
      int i = kept[a];
      long long acc = 0;
      for (int c = 0; c < k; ++c) acc += snf.U[i][c] * x[c];
      long long r = acc % d[i];
      if (r < 0) r += d[i];
      q[a] = static_cast<int>(r);
    }
    return q;
  };
  auto lift_coords = [&](const std::vector<int>& q) {
    // U_inverse * q~ where q~ has the kept residues and zero elsewhere,
    // reduced into the parent's canonical coordinates.
    std::vector<long long> full(k, 0);
    for (std::size_t a = 0; a < kept.size(); ++a) full[kept[a]] = q[a];
    std::vector<long long> raw(k, 0);
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) raw[i] += snf.U_inverse[i][c] * full[c];
    return ring.reduce(raw);
  };

  if (kept.empty()) {
    return QuotientRing{FiniteRing::zero_ring(),
                        std::vector<std::uint64_t>(ring.order(), 0),
                        {ring.zero()}};
  }

  RingSpec qspec;
  for (int i : kept) qspec.additive_orders.push_back(static_cast<int>(d[i]));
  const int kq = static_cast<int>(kept.size());
  std::vector<RingElement> basis_lift(kq);
  for (int a = 0; a < kq; ++a) {
    std::vector<int> e(kq, 0);
    e[a] = 1;
    basis_lift[a] = lift_coords(e);
  }
  qspec.unity = project_coords(ring.unity());
  qspec.mul.assign(kq, std::vector<RingElement>(kq));
  for (int a = 0; a < kq; ++a)
    for (int b = 0; b < kq; ++b)
      qspec.mul[a][b] = project_coords(ring.mul(basis_lift[a], basis_lift[b]));

  FiniteRing qring = FiniteRing::from_spec(std::move(qspec));
  std::vector<std::uint64_t> projection(ring.order());
  for (std::uint64_t p = 0; p < ring.order(); ++p)
    projection[p] = qring.index_of(project_coords(ring.element_at(p)));
  std::vector<RingElement> section(qring.order());
  for (std::uint64_t q = 0; q < qring.order(); ++q)
    section[q] = lift_coords(qring.element_at(q));
  return QuotientRing{std::move(qring), std::move(projection),
                      std::move(section)};
}

}  // namespace gradering
