#include "chromhom/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chromhom/errors.hpp"

namespace chromhom {

namespace {

// ---------------------------------------------------------------------------
// Scalar helpers shared by the int64 and GMP paths.

bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

bool is_zero(std::int64_t v) { return v == 0; }
bool is_zero(const BigInt& v) { return sgn(v) == 0; }

// a - f * b
std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("int64 overflow in elimination");
  return out;
}
BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

std::int64_t negate(std::int64_t v) {
  if (v == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("int64 overflow in elimination");
  return -v;
}
BigInt negate(const BigInt& v) { return -v; }

BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
BigInt to_big(const BigInt& v) { return v; }

template <class Int>
using SparseRow = std::vector<std::pair<std::uint32_t, Int>>;

template <class Int>
const Int* row_value(const SparseRow<Int>& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// target - factor * pivot, merged over sorted columns. Reports columns that
// became nonzero in `target`.
template <class Int>
SparseRow<Int> combine(const SparseRow<Int>& target, const Int& factor, const SparseRow<Int>& pivot,
                       std::vector<std::uint32_t>& new_cols) {
  SparseRow<Int> out;
  out.reserve(target.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
      out.push_back(target[a++]);
    } else if (a == target.size() || pivot[b].first < target[a].first) {
      Int v = sub_mul(Int(0), factor, pivot[b].second);
      if (!is_zero(v)) {
        out.emplace_back(pivot[b].first, std::move(v));
        new_cols.push_back(pivot[b].first);
      }
      ++b;
    } else {
      Int v = sub_mul(target[a].second, factor, pivot[b].second);
      if (!is_zero(v)) out.emplace_back(target[a].first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Dense Smith form on minimal-magnitude pivots; returns the (unnormalized)
// diagonal magnitudes.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    auto find_min = [&](bool whole, std::size_t& pr, std::size_t& pc) {
      bool found = false;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole && i != t && j != t) continue;
          if (sgn(a[i][j]) == 0) continue;
          if (!found || abs(a[i][j]) < best) {
            best = abs(a[i][j]);
            pr = i;
            pc = j;
            found = true;
            if (best == 1) return true;
          }
        }
      return found;
    };
    std::size_t pr = 0, pc = 0;
    if (!find_min(true, pr, pc)) break;
    for (;;) {
      std::swap(a[t], a[pr]);
      for (std::size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pc]);
      bool clean = true;
      const BigInt pivot = a[t][t];
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), pivot.get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = t; j < cols; ++j)
            if (sgn(a[t][j]) != 0) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), pivot.get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t i = t; i < rows; ++i)
            if (sgn(a[i][t]) != 0) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (clean) break;
      // A remainder smaller than the pivot is left in row or column t.
      find_min(false, pr, pc);
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

void normalize_chain(std::vector<BigInt>& diag) {
  std::sort(diag.begin(), diag.end());
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
}

template <class Int>
SmithForm smith_impl(const SparseMatrix& m) {
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols();
  std::vector<SparseRow<Int>> rows(n_rows);
  std::vector<std::vector<std::uint32_t>> col_rows(n_cols);
  for (const MatrixEntry& e : m.entries()) {
    rows[e.row].emplace_back(static_cast<std::uint32_t>(e.col), Int(e.value));
    col_rows[e.col].push_back(static_cast<std::uint32_t>(e.row));
  }
  std::vector<bool> alive(n_rows, true);
  std::size_t unit_pivots = 0;

  // Rows keyed by length; stale heap entries are skipped on pop.
  using Item = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (std::uint32_t r = 0; r < n_rows; ++r)
    if (!rows[r].empty()) queue.emplace(rows[r].size(), r);

  std::vector<std::uint32_t> new_cols;
  while (!queue.empty()) {
    auto [len, r] = queue.top();
    queue.pop();
    if (!alive[r] || rows[r].size() != len || rows[r].empty()) continue;

    // Unit entry of this row whose column is shortest.
    std::size_t best = rows[r].size();
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (!is_unit(rows[r][k].second)) continue;
      std::size_t count = col_rows[rows[r][k].first].size();
      if (count < best_count) {
        best = k;
        best_count = count;
      }
    }
    if (best == rows[r].size()) continue;  // re-queued if a later update touches it

    const std::uint32_t c = rows[r][best].first;
    const Int pivot = rows[r][best].second;
    const SparseRow<Int> pivot_row = rows[r];
    alive[r] = false;
    ++unit_pivots;

    std::vector<std::uint32_t> touched = std::move(col_rows[c]);
    col_rows[c].clear();
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t r2 : touched) {
      if (r2 == r || !alive[r2]) continue;
      const Int* v = row_value(rows[r2], c);
      if (v == nullptr) continue;
      // pivot is +-1, so its inverse is itself.
      Int factor = pivot == Int(1) ? *v : negate(*v);
      new_cols.clear();
      rows[r2] = combine(rows[r2], factor, pivot_row, new_cols);
      for (std::uint32_t nc : new_cols) col_rows[nc].push_back(r2);
      if (!rows[r2].empty()) queue.emplace(rows[r2].size(), r2);
    }
  }

  // Whatever is left has no unit entries.
  std::vector<std::uint32_t> rest_rows;
  std::vector<std::int64_t> col_slot(n_cols, -1);
  std::size_t rest_cols = 0;
  for (std::uint32_t r = 0; r < n_rows; ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    rest_rows.push_back(r);
    for (const auto& [c, v] : rows[r])
      if (col_slot[c] < 0) col_slot[c] = static_cast<std::int64_t>(rest_cols++);
  }
  std::vector<std::vector<BigInt>> dense(rest_rows.size(), std::vector<BigInt>(rest_cols));
  for (std::size_t i = 0; i < rest_rows.size(); ++i)
    for (const auto& [c, v] : rows[rest_rows[i]]) dense[i][col_slot[c]] = to_big(v);

  SmithForm form;
  form.invariant_factors.assign(unit_pivots, BigInt(1));
  std::vector<BigInt> diag = dense_diagonal(std::move(dense));
  form.invariant_factors.insert(form.invariant_factors.end(), diag.begin(), diag.end());
  normalize_chain(form.invariant_factors);
  return form;
}

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m) {
  try {
    return smith_impl<std::int64_t>(m);
  } catch (const std::overflow_error&) {
    return smith_impl<BigInt>(m);
  }
}

// ---------------------------------------------------------------------------

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << '^' << free_rank;
    first = false;
  }
  for (const BigInt& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t.get_str();
    first = false;
  }
  return out.str();
}

HomologyGroup HomologySummary::group(int i, int j) const {
  auto it = groups_.find({i, j});
  return it == groups_.end() ? HomologyGroup{} : it->second;
}

void HomologySummary::set(int i, int j, HomologyGroup g) {
  if (g.is_zero())
    groups_.erase({i, j});
  else
    groups_[{i, j}] = std::move(g);
}

unsigned default_thread_count() {
  unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NBC_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) return std::min(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

HomologySummary homology(const BasedComplex& c, unsigned threads) {
  if (auto bad = find_nonzero_square(c))
    throw EngineError("d^2 != 0 starting at bigrade (" + std::to_string(bad->first) + "," +
                      std::to_string(bad->second) + ")");

  std::vector<std::pair<int, int>> keys;
  std::vector<const SparseMatrix*> matrices;
  for (const auto& [bigrade, d] : c.differentials()) {
    keys.push_back(bigrade);
    matrices.push_back(&d);
  }
  std::vector<SmithForm> forms(matrices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < matrices.size(); t = next++)
      if (!matrices[t]->is_zero()) forms[t] = smith_normal_form(*matrices[t]);
  };
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, matrices.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::map<std::pair<int, int>, const SmithForm*> by_bigrade;
  for (std::size_t t = 0; t < keys.size(); ++t) by_bigrade.emplace(keys[t], &forms[t]);
  auto form_at = [&](int i, int j) -> const SmithForm* {
    auto it = by_bigrade.find({i, j});
    return it == by_bigrade.end() ? nullptr : it->second;
  };

  HomologySummary h;
  for (int i = 0; i <= c.max_homological_degree(); ++i)
    for (int j = 0; j <= c.max_internal_degree(); ++j) {
      const std::size_t dim = c.dimension(i, j);
      const SmithForm* out = form_at(i, j);
      const SmithForm* in = form_at(i - 1, j);
      const std::size_t rank_out = out ? out->rank() : 0;
      const std::size_t rank_in = in ? in->rank() : 0;
      if (rank_out + rank_in > dim) throw EngineError("rank exceeds dimension at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      HomologyGroup g;
      g.free_rank = dim - rank_out - rank_in;
      if (in)
        for (const BigInt& f : in->invariant_factors)
          if (f > 1) g.torsion.push_back(f);
      h.set(i, j, std::move(g));
    }
  return h;
}

LaurentPolynomial euler_characteristic(const HomologySummary& h) {
  LaurentPolynomial chi;
  for (const auto& [bigrade, g] : h.groups()) {
    BigInt rank(static_cast<unsigned long>(g.free_rank));
    chi.add_term(bigrade.second, bigrade.first % 2 == 0 ? rank : BigInt(-rank));
  }
  return chi;
}

bool euler_check(const HomologySummary& h, const BasedComplex& c) {
  return euler_characteristic(h) == graded_euler_characteristic(c);
}

std::optional<Support> support(const HomologySummary& h) {
  if (h.is_zero()) return std::nullopt;
  Support s{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(), std::numeric_limits<int>::max(),
            std::numeric_limits<int>::min()};
  for (const auto& [bigrade, g] : h.groups()) {
    s.i_min = std::min(s.i_min, bigrade.first);
    s.i_max = std::max(s.i_max, bigrade.first);
    s.j_min = std::min(s.j_min, bigrade.second);
    s.j_max = std::max(s.j_max, bigrade.second);
  }
  return s;
}

std::vector<std::string> diff_summaries(const HomologySummary& a, const HomologySummary& b) {
  std::vector<std::string> out;
  std::map<std::pair<int, int>, bool> keys;
  for (const auto& [k, g] : a.groups()) keys[k] = true;
  for (const auto& [k, g] : b.groups()) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    HomologyGroup ga = a.group(k.first, k.second);
    HomologyGroup gb = b.group(k.first, k.second);
    if (!(ga == gb))
      out.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + ga.to_string() +
                    " vs " + gb.to_string());
  }
  return out;
}

nlohmann::json bigint_to_json(const BigInt& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

nlohmann::json homology_to_json(const HomologySummary& h) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& [bigrade, g] : h.groups()) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const BigInt& t : g.torsion) torsion.push_back(bigint_to_json(t));
    groups.push_back({{"i", bigrade.first}, {"j", bigrade.second}, {"free", g.free_rank}, {"torsion", torsion}});
  }
  return {{"groups", groups}, {"euler", euler_characteristic(h).to_string()}};
}

std::string homology_to_tsv(const HomologySummary& h) {
  std::ostringstream out;
  out << "i\tj\tfree\ttorsion\n";
  for (const auto& [bigrade, g] : h.groups()) {
    out << bigrade.first << '\t' << bigrade.second << '\t' << g.free_rank << '\t';
    for (std::size_t k = 0; k < g.torsion.size(); ++k) out << (k ? "," : "") << g.torsion[k].get_str();
    out << '\n';
  }
  return out.str();
}

}  // namespace chromhom
