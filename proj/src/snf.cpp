#include "symloop/snf.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "symloop/errors.hpp"
#include "symloop/field.hpp"

namespace symloop {

namespace {

// Arithmetic policies for the eliminator. quotient(a, v) returns q such that
// |a - q v| < |v| (exactly 0 over a field).

struct IntegerOps {
  using value_type = mpz_class;
  static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
  static bool is_unit(const mpz_class& a) { return a == 1 || a == -1; }
  static bool smaller(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
  mpz_class quotient(const mpz_class& a, const mpz_class& v) const {
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), v.get_mpz_t());
    return q;
  }
  static mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
  static mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
};

struct ModOps {
  using value_type = std::uint64_t;
  std::uint64_t p;
  static bool is_zero(std::uint64_t a) { return a == 0; }
  static bool is_unit(std::uint64_t a) { return a != 0; }
  static bool smaller(std::uint64_t, std::uint64_t) { return false; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (p - b); }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t quotient(std::uint64_t a, std::uint64_t v) const { return mul(a, inv(v)); }
};

template <class Ops>
class SparseEliminator {
  using T = typename Ops::value_type;

  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<T> vals;
    bool alive = true;
  };

 public:
  SparseEliminator(std::size_t cols, Ops ops) : ops_(std::move(ops)), col_rows_(cols), col_count_(cols, 0) {}

  void add_row(std::vector<std::uint32_t> cols, std::vector<T> vals) {
    const auto id = static_cast<std::uint32_t>(rows_.size());
    for (auto c : cols) {
      col_rows_[c].push_back(id);
      ++col_count_[c];
    }
    rows_.push_back(Row{std::move(cols), std::move(vals), true});
    stamp_.push_back(0);
  }

  /// Runs the elimination; returns the pivot values in elimination order.
  std::vector<T> run() {
    std::vector<T> pivots;
    for (;;) {
      auto [r, c] = choose_pivot();
      if (r == kNone) break;
      pivots.push_back(reduce(r, c));
    }
    return pivots;
  }

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  std::ptrdiff_t find(const Row& row, std::uint32_t c) const {
    auto it = std::lower_bound(row.cols.begin(), row.cols.end(), c);
    if (it == row.cols.end() || *it != c) return -1;
    return it - row.cols.begin();
  }

  /// Live rows with a nonzero in column c; compacts the occurrence list.
  const std::vector<std::uint32_t>& rows_in(std::uint32_t c) {
    ++epoch_;
    auto& list = col_rows_[c];
    std::size_t out = 0;
    for (auto r : list) {
      if (stamp_[r] == epoch_ || !rows_[r].alive || find(rows_[r], c) < 0) continue;
      stamp_[r] = epoch_;
      list[out++] = r;
    }
    list.resize(out);
    return list;
  }

  std::pair<std::uint32_t, std::uint32_t> choose_pivot() {
    std::vector<std::uint32_t> order;
    for (std::uint32_t c = 0; c < col_count_.size(); ++c)
      if (col_count_[c] > 0) order.push_back(c);
    if (order.empty()) return {kNone, kNone};
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return col_count_[a] < col_count_[b]; });
    // Unit pivot in the sparsest column that has one; sparsest row within it.
    for (auto c : order) {
      std::uint32_t best = kNone;
      for (auto r : rows_in(c)) {
        const auto& row = rows_[r];
        if (!Ops::is_unit(row.vals[static_cast<std::size_t>(find(row, c))])) continue;
        if (best == kNone || row.cols.size() < rows_[best].cols.size()) best = r;
      }
      if (best != kNone) return {best, c};
    }
    // No unit anywhere: global entry of least absolute value.
    std::uint32_t br = kNone, bc = kNone;
    const T* bv = nullptr;
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      if (!row.alive) continue;
      for (std::size_t k = 0; k < row.cols.size(); ++k)
        if (!bv || Ops::smaller(row.vals[k], *bv)) {
          bv = &row.vals[k];
          br = r;
          bc = row.cols[k];
        }
    }
    return {br, bc};
  }

  /// target -= q * source (row operation).
  void axpy(std::uint32_t target, std::uint32_t source, const T& q) {
    Row& t = rows_[target];
    const Row& s = rows_[source];
    std::vector<std::uint32_t> cols;
    std::vector<T> vals;
    cols.reserve(t.cols.size() + s.cols.size());
    vals.reserve(t.cols.size() + s.cols.size());
    std::size_t i = 0, j = 0;
    while (i < t.cols.size() || j < s.cols.size()) {
      if (j == s.cols.size() || (i < t.cols.size() && t.cols[i] < s.cols[j])) {
        cols.push_back(t.cols[i]);
        vals.push_back(std::move(t.vals[i]));
        ++i;
      } else if (i == t.cols.size() || s.cols[j] < t.cols[i]) {
        T v = ops_.sub(T(0), ops_.mul(q, s.vals[j]));
        if (!Ops::is_zero(v)) {
          cols.push_back(s.cols[j]);
          vals.push_back(std::move(v));
          col_rows_[s.cols[j]].push_back(target);
          ++col_count_[s.cols[j]];
        }
        ++j;
      } else {
        T v = ops_.sub(t.vals[i], ops_.mul(q, s.vals[j]));
        if (Ops::is_zero(v)) {
          --col_count_[t.cols[i]];
        } else {
          cols.push_back(t.cols[i]);
          vals.push_back(std::move(v));
        }
        ++i;
        ++j;
      }
    }
    t.cols = std::move(cols);
    t.vals = std::move(vals);
  }

  T reduce(std::uint32_t r, std::uint32_t c) {
    for (;;) {
      const T v = rows_[r].vals[static_cast<std::size_t>(find(rows_[r], c))];
      // Clear column c by row operations.
      std::vector<std::uint32_t> others;
      for (auto o : rows_in(c))
        if (o != r) others.push_back(o);
      std::uint32_t best_row = kNone;
      const T* best_val = nullptr;
      for (auto o : others) {
        const auto k = static_cast<std::size_t>(find(rows_[o], c));
        T q = ops_.quotient(rows_[o].vals[k], v);
        if (!Ops::is_zero(q)) axpy(o, r, q);
        auto kk = find(rows_[o], c);
        if (kk >= 0) {
          const T& rem = rows_[o].vals[static_cast<std::size_t>(kk)];
          if (!best_val || Ops::smaller(rem, *best_val)) {
            best_val = &rem;
            best_row = o;
          }
        }
      }
      if (best_row != kNone) {
        r = best_row;
        continue;
      }
      // Clear row r by column operations; column c is zero outside row r, so
      // only row r changes.
      Row& row = rows_[r];
      std::vector<std::uint32_t> cols;
      std::vector<T> vals;
      std::uint32_t best_col = kNone;
      std::size_t best_idx = 0;
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        if (row.cols[k] == c) {
          cols.push_back(c);
          vals.push_back(row.vals[k]);
          continue;
        }
        T q = ops_.quotient(row.vals[k], v);
        T rem = ops_.sub(row.vals[k], ops_.mul(q, v));
        if (Ops::is_zero(rem)) {
          --col_count_[row.cols[k]];
          continue;
        }
        cols.push_back(row.cols[k]);
        vals.push_back(std::move(rem));
        if (best_col == kNone || Ops::smaller(vals.back(), vals[best_idx])) {
          best_col = row.cols[k];
          best_idx = vals.size() - 1;
        }
      }
      row.cols = std::move(cols);
      row.vals = std::move(vals);
      if (best_col != kNone) {
        c = best_col;
        continue;
      }
      row.alive = false;
      --col_count_[c];
      return v;
    }
  }

  Ops ops_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

std::uint64_t random_prime_above(std::mt19937_64& rng, const mpz_class& floor) {
  constexpr std::uint64_t lo = 1ull << 40, hi = 1ull << 41;
  if (cmp(floor, mpz_class(static_cast<unsigned long>(lo))) >= 0) return 0;
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  for (;;) {
    std::uint64_t c = dist(rng) | 1u;
    if (is_prime(c)) return c;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<long>>& dense) {
  SparseIntMatrix m(0, dense.empty() ? 0 : dense.front().size());
  for (const auto& row : dense) {
    if (row.size() != m.cols) throw DomainError("ragged dense matrix");
    SparseRow r;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c]) r.emplace_back(static_cast<std::uint32_t>(c), mpz_class(row[c]));
    m.push_row(std::move(r));
  }
  return m;
}

void SparseIntMatrix::push_row(SparseRow entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow merged;
  for (auto& [c, v] : entries) {
    if (c >= cols) throw DomainError("column index " + std::to_string(c) + " out of range");
    if (!merged.empty() && merged.back().first == c)
      merged.back().second += v;
    else
      merged.emplace_back(c, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  data.push_back(std::move(merged));
  rows = data.size();
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data) n += r.size();
  return n;
}

SparseIntMatrix SparseIntMatrix::transposed() const {
  SparseIntMatrix t(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : data[r]) t.data[c].emplace_back(static_cast<std::uint32_t>(r), v);
  return t;
}

SparseIntMatrix SparseIntMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                          const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows || col_perm.size() != cols) throw DomainError("permutation size mismatch");
  SparseIntMatrix p(0, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    SparseRow row;
    for (const auto& [c, v] : data[row_perm[r]]) row.emplace_back(static_cast<std::uint32_t>(col_perm[c]), v);
    p.push_row(std::move(row));
  }
  return p;
}

std::vector<mpz_class> SmithForm::torsion() const {
  std::vector<mpz_class> t;
  for (const auto& d : diagonal)
    if (d > 1) t.push_back(d);
  return t;
}

std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> d) {
  for (auto& x : d) x = abs(x);
  // Only non-units take part in the gcd/lcm exchange.
  std::vector<mpz_class> big;
  std::size_t ones = 0;
  for (auto& x : d) {
    if (x == 1)
      ++ones;
    else if (x != 0)
      big.push_back(x);
  }
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      mpz_class g = gcd(big[i], big[j]);
      if (g == big[i]) continue;
      mpz_class l = big[i] / g * big[j];
      big[i] = g;
      big[j] = l;
    }
  std::vector<mpz_class> out(ones, mpz_class(1));
  for (auto& x : big)
    if (x == 1)
      out.insert(out.begin(), x);
    else
      out.push_back(x);
  return out;
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("rank_mod_p: modulus is not prime");
  SparseEliminator<ModOps> el(m.cols, ModOps{p});
  for (const auto& row : m.data) {
    std::vector<std::uint32_t> cols;
    std::vector<std::uint64_t> vals;
    for (const auto& [c, v] : row) {
      std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), p);
      if (r) {
        cols.push_back(c);
        vals.push_back(r);
      }
    }
    el.add_row(std::move(cols), std::move(vals));
  }
  return el.run().size();
}

SmithForm smith_normal_form(const SparseIntMatrix& m, const SnfOptions& options) {
  SparseEliminator<IntegerOps> el(m.cols, IntegerOps{});
  for (const auto& row : m.data) {
    std::vector<std::uint32_t> cols;
    std::vector<mpz_class> vals;
    for (const auto& [c, v] : row) {
      cols.push_back(c);
      vals.push_back(v);
    }
    el.add_row(std::move(cols), std::move(vals));
  }
  SmithForm s;
  s.rows = m.rows;
  s.cols = m.cols;
  s.diagonal = normalize_diagonal(el.run());
  s.rank = s.diagonal.size();
  if (options.modular_check && s.rank > 0) {
    std::mt19937_64 rng(options.seed);
    mpz_class largest = *std::max_element(s.diagonal.begin(), s.diagonal.end());
    for (int k = 0; k < 2; ++k) {
      std::uint64_t p = random_prime_above(rng, largest);
      if (!p) break;
      std::size_t rp = rank_mod_p(m, p);
      if (rp != s.rank)
        throw std::logic_error("smith_normal_form: integer rank " + std::to_string(s.rank) + " disagrees with rank " +
                               std::to_string(rp) + " mod " + std::to_string(p));
    }
  }
  return s;
}

AbelianGroupPresentation present(std::vector<std::string> generators, SparseIntMatrix relations,
                                 const SnfOptions& options) {
  if (relations.cols != generators.size())
    throw DomainError("relation matrix has " + std::to_string(relations.cols) + " columns for " +
                      std::to_string(generators.size()) + " generators");
  AbelianGroupPresentation out;
  SmithForm s = smith_normal_form(relations, options);
  out.invariant_factors = s.torsion();
  out.free_rank = generators.size() - s.rank;
  out.generators = std::move(generators);
  out.relations = std::move(relations);
  return out;
}

}  // namespace symloop
