#include "grouplab/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "grouplab/arith.hpp"
#include "grouplab/errors.hpp"

namespace grouplab {

namespace {

using Vec = std::vector<std::uint64_t>;

// Modular linear algebra over F_p, p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, p_); }

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) const {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t sel = r;
      while (sel < rows.size() && rows[sel][c] == 0) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[r], rows[sel]);
      const std::uint64_t scale = inv(rows[r][c]);
      for (auto& v : rows[r]) v = mul(v, scale);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        const std::uint64_t f = rows[i][c];
        for (std::size_t cc = c; cc < cols; ++cc) {
          if (rows[r][cc] != 0) rows[i][cc] = sub(rows[i][cc], mul(f, rows[r][cc]));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    rows.resize(r);
    return pivots;
  }

  // Basis of { c : m c = 0 } for a square matrix given by rows.
  std::vector<Vec> nullspace(std::vector<Vec> m) const {
    const std::size_t n = m.empty() ? 0 : m.front().size();
    auto pivots = rref(m, n);
    std::vector<std::uint8_t> is_pivot(n, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      Vec v(n, 0);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, m[r][free]);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::uint64_t p_;
};

// A subspace of F_p^k in reduced row echelon form.
struct Subspace {
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(const PrimeField& f, std::vector<Vec> vectors, std::size_t k) {
  Subspace s;
  s.pivots = f.rref(vectors, k);
  s.basis = std::move(vectors);
  return s;
}

// Splits a common eigenspace w of the class matrices into eigenspaces of
// matrix j. Eigenvalues are found by scanning F_p in ascending order.
std::vector<Subspace> split(const PrimeField& f, const ClassMatrices& cm, std::size_t j,
                            const Subspace& w) {
  const std::size_t k = cm.k;
  const std::size_t d = w.basis.size();
  // Restriction to w in coordinates given by the pivot entries:
  // a[l][i] = (M_j b_i)[pivot_l], (M_j v)_r = sum_c a(j, r, c) v_c.
  std::vector<Vec> a(d, Vec(d, 0));
  for (std::size_t l = 0; l < d; ++l) {
    const std::size_t r = w.pivots[l];
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t acc = 0;
      const auto& b = w.basis[i];
      for (std::size_t c = 0; c < k; ++c) {
        const std::uint32_t coeff = cm(j, r, c);
        if (coeff != 0 && b[c] != 0) acc = (acc + coeff % f.p() * b[c]) % f.p();
      }
      a[l][i] = acc;
    }
  }

  bool scalar = true;
  for (std::size_t l = 0; l < d && scalar; ++l) {
    for (std::size_t i = 0; i < d && scalar; ++i) scalar = (l == i) ? a[l][i] == a[0][0] : a[l][i] == 0;
  }
  if (scalar) return {w};

  std::vector<Subspace> parts;
  std::size_t found = 0;
  for (std::uint64_t lambda = 0; lambda < f.p() && found < d; ++lambda) {
    auto shifted = a;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    auto null = f.nullspace(std::move(shifted));
    if (null.empty()) continue;
    std::vector<Vec> vectors;
    for (const auto& c : null) {
      Vec v(k, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (c[i] == 0) continue;
        for (std::size_t x = 0; x < k; ++x) v[x] = f.add(v[x], f.mul(c[i], w.basis[i][x]));
      }
      vectors.push_back(std::move(v));
    }
    found += vectors.size();
    parts.push_back(make_subspace(f, std::move(vectors), k));
  }
  if (found != d) throw InternalError("class matrix is not diagonalizable over F_p");
  return parts;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool row_less(const CharacterRow& a, const CharacterRow& b, std::uint64_t da, std::uint64_t db) {
  if (da != db) return da < db;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& ca = a[j].coeffs();
    const auto& cb = b[j].coeffs();
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
      if (ca[i] != cb[i]) return ca[i] < cb[i];
    }
    if (ca.size() != cb.size()) return ca.size() < cb.size();
  }
  return false;
}

// Sparse integer image of a value in Z[x]/(x^M - 1); empty optional when
// some coefficient is not a small integer.
using Sparse = std::vector<std::pair<std::uint32_t, std::int64_t>>;

std::optional<Sparse> sparse_integers(const Cyclotomic& v) {
  Sparse out;
  const auto& c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    if (mpz_cmp_ui(c[i].get_den_mpz_t(), 1) != 0 || !mpz_fits_sint_p(c[i].get_num_mpz_t())) {
      return std::nullopt;
    }
    out.emplace_back(static_cast<std::uint32_t>(i), mpz_get_si(c[i].get_num_mpz_t()));
  }
  return out;
}

// Computes sum_t weight_t * a_t * conj(b_t) and compares with target, using
// machine integers when every value allows it.
class PairingChecker {
 public:
  PairingChecker(const std::vector<CharacterRow>& rows, std::uint64_t conductor)
      : conductor_(conductor) {
    lifted_.reserve(rows.size());
    for (const auto& row : rows) {
      CharacterRow lrow;
      std::vector<Sparse> srow;
      for (const auto& v : row) {
        lrow.push_back(v.change_conductor(conductor));
        if (auto s = sparse_integers(lrow.back())) {
          srow.push_back(std::move(*s));
        } else {
          all_integer_ = false;
        }
      }
      lifted_.push_back(std::move(lrow));
      sparse_.push_back(std::move(srow));
    }
  }

  // Pairs entries (ra, ca) and (rb, cb) for t = 0..n-1 via the accessor.
  template <typename Index>
  bool equals(std::size_t n, Index index, const std::vector<std::int64_t>& weights,
              std::int64_t target) const {
    if (all_integer_) {
      if (auto r = integer_sum(n, index, weights)) return *r == Cyclotomic::embed(target, conductor_);
    }
    Cyclotomic acc = Cyclotomic::zero(conductor_);
    for (std::size_t t = 0; t < n; ++t) {
      auto [ra, ca, rb, cb] = index(t);
      acc += Cyclotomic::embed(weights[t], conductor_) * lifted_[ra][ca] * lifted_[rb][cb].conjugate();
    }
    return acc == Cyclotomic::embed(target, conductor_);
  }

 private:
  template <typename Index>
  std::optional<Cyclotomic> integer_sum(std::size_t n, Index index,
                                        const std::vector<std::int64_t>& weights) const {
    std::vector<std::int64_t> acc(conductor_, 0);
    const auto m = static_cast<std::int64_t>(conductor_);
    for (std::size_t t = 0; t < n; ++t) {
      auto [ra, ca, rb, cb] = index(t);
      for (const auto& [ea, va] : sparse_[ra][ca]) {
        for (const auto& [eb, vb] : sparse_[rb][cb]) {
          std::int64_t term = 0;
          if (__builtin_mul_overflow(va, vb, &term) ||
              __builtin_mul_overflow(term, weights[t], &term)) {
            return std::nullopt;
          }
          const auto e = static_cast<std::size_t>(((static_cast<std::int64_t>(ea) - eb) % m + m) % m);
          if (__builtin_add_overflow(acc[e], term, &acc[e])) return std::nullopt;
        }
      }
    }
    return Cyclotomic::from_root_counts(conductor_, acc);
  }

  std::uint64_t conductor_;
  bool all_integer_ = true;
  std::vector<CharacterRow> lifted_;
  std::vector<std::vector<Sparse>> sparse_;
};

}  // namespace

ClassMatrices class_matrices(const Group& g, const ClassList& classes) {
  ClassMatrices cm;
  cm.k = classes.size();
  const std::size_t k = cm.k;
  cm.data.assign(k * k * k, 0);
  for (std::size_t l = 0; l < k; ++l) {
    const Element z = classes[l].rep;
    for (std::size_t i = 0; i < k; ++i) {
      for (auto x : classes[i].members.members()) {
        const Element y = g.mul(g.inv(x), z);
        ++cm.data[(i * k + classes.class_of[y]) * k + l];
      }
    }
  }
  return cm;
}

std::uint64_t dixon_prime(const Group& g, std::uint64_t search_cap) {
  const std::uint64_t e = g.exponent();
  const std::uint64_t bound = 4 * g.order();
  for (std::uint64_t p = e + 1; p <= search_cap; p += e) {
    if (p * p > bound && is_prime(p)) return p;
  }
  throw CapExceeded("no Dixon prime below " + std::to_string(search_cap));
}

CharacterTable::CharacterTable(Group group, ClassList classes, std::vector<CharacterRow> rows)
    : group_(std::move(group)), classes_(std::move(classes)), rows_(std::move(rows)) {
  power_map_ = power_class_map(group_, classes_);
}

std::uint64_t CharacterTable::degree(std::size_t row) const {
  auto q = rows_[row][0].rational_value();
  if (!q || q->get_den() != 1 || sgn(*q) <= 0 || !q->get_num().fits_ulong_p()) {
    throw InternalError("character value at the identity is not a positive integer");
  }
  return q->get_num().get_ui();
}

RowStructure CharacterTable::structure(std::size_t row) const {
  if (!structure_.empty()) return structure_[row];
  return kernel_and_center(*this, row);
}

std::size_t CharacterTable::principal_row() const {
  const auto one = Cyclotomic::embed(1);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (std::all_of(rows_[r].begin(), rows_[r].end(), [&](const Cyclotomic& v) { return v == one; })) {
      return r;
    }
  }
  throw InternalError("character table has no trivial character");
}

CharacterTable character_table(const Group& g) {
  auto classes = conjugacy_classes(g);
  const std::size_t k = classes.size();
  const std::uint64_t n = g.order();
  const std::uint64_t e = g.exponent();
  const auto cm = class_matrices(g, classes);
  const PrimeField f(dixon_prime(g));
  const std::uint64_t p = f.p();

  // Common eigenvectors of all class matrices.
  std::vector<Vec> identity(k, Vec(k, 0));
  for (std::size_t i = 0; i < k; ++i) identity[i][i] = 1;
  std::vector<Subspace> spaces{make_subspace(f, std::move(identity), k)};
  for (std::size_t j = 1; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) {
      break;
    }
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(f, cm, j, s)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw InternalError("class matrices did not split into k eigenspaces");

  CharacterTable table(g, classes, {});
  const auto& pm = table.power_map();
  const std::uint64_t z = pow_mod(primitive_root(p), (p - 1) / e, p);
  std::vector<std::uint64_t> zpow(e);
  std::unordered_map<std::uint64_t, std::uint64_t> zlog;
  for (std::uint64_t t = 0, acc = 1; t < e; ++t, acc = f.mul(acc, z)) {
    zpow[t] = acc;
    zlog.emplace(acc, t);
  }
  const std::uint64_t root = isqrt(n);

  std::vector<CharacterRow> rows;
  std::vector<std::uint64_t> degrees;
  for (const auto& s : spaces) {
    Vec omega = s.basis.front();
    if (omega[0] == 0) throw InternalError("central character vanishes on the identity class");
    const std::uint64_t norm = f.inv(omega[0]);
    for (auto& v : omega) v = f.mul(v, norm);

    // chi(1)^2 = |G| / sum_i omega_i omega_{i'} / |C_i|
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      sum = f.add(sum, f.mul(f.mul(omega[i], omega[pm.inverse_class[i]]), f.inv(classes[i].size() % p)));
    }
    if (sum == 0) throw InternalError("degree normalization vanished mod p");
    const std::uint64_t target = f.mul(n % p, f.inv(sum));
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= root; ++d) {
      if (d * d % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw InternalError("no integer square root for character degree");

    Vec chi(k);
    for (std::size_t i = 0; i < k; ++i) {
      chi[i] = f.mul(f.mul(omega[i], degree % p), f.inv(classes[i].size() % p));
    }

    CharacterRow row;
    row.reserve(k);
    std::vector<std::int64_t> counts(e);
    for (std::size_t j = 0; j < k; ++j) {
      std::fill(counts.begin(), counts.end(), 0);
      const std::uint64_t o = g.element_order(classes[j].rep);
      const std::uint64_t step = e / o;
      if (degree == 1) {
        auto it = zlog.find(chi[j]);
        if (it == zlog.end() || it->second % step != 0) {
          throw InternalError("linear character value is not a root of unity of the right order");
        }
        counts[it->second] = 1;
      } else {
        // Multiplicity of zeta_o^t as an eigenvalue of the representing matrix.
        const std::uint64_t o_inv = f.inv(o % p);
        std::int64_t total = 0;
        for (std::uint64_t t = 0; t < o; ++t) {
          std::uint64_t acc = 0;
          for (std::uint64_t l = 0; l < o; ++l) {
            const std::uint64_t exp = (e - (t * l % o) * step % e) % e;
            acc = f.add(acc, f.mul(chi[pm(j, l)], zpow[exp]));
          }
          const std::uint64_t mult = f.mul(acc, o_inv);
          if (mult > degree) throw InternalError("lifted eigenvalue multiplicity out of range");
          counts[t * step] = static_cast<std::int64_t>(mult);
          total += static_cast<std::int64_t>(mult);
        }
        if (total != static_cast<std::int64_t>(degree)) {
          throw InternalError("lifted eigenvalue multiplicities do not sum to the degree");
        }
      }
      row.push_back(Cyclotomic::from_root_counts(e, counts));
    }
    rows.push_back(std::move(row));
    degrees.push_back(degree);
  }

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row_less(rows[a], rows[b], degrees[a], degrees[b]);
  });
  for (auto i : order) table.rows_.push_back(std::move(rows[i]));

  const auto report = check_orthogonality(table);
  if (!report.all()) throw InternalError("computed character table fails orthogonality");

  table.structure_.reserve(k);
  for (std::size_t r = 0; r < k; ++r) table.structure_.push_back(kernel_and_center(table, r));
  return table;
}

RowStructure kernel_and_center(const CharacterTable& t, std::size_t row) {
  const auto& g = t.group();
  const auto& classes = t.classes();
  const std::uint64_t d = t.degree(row);
  const auto chi1 = Cyclotomic::embed(Rational(d));
  std::vector<Element> ker, cen;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto& v = t.value(row, j);
    const auto& members = classes[j].members.members();
    if (v == chi1) {
      ker.insert(ker.end(), members.begin(), members.end());
      cen.insert(cen.end(), members.begin(), members.end());
    } else if (v.modulus_equals(Rational(d))) {
      cen.insert(cen.end(), members.begin(), members.end());
    }
  }
  RowStructure s{Subgroup::from_members(std::move(ker), true), Subgroup::from_members(std::move(cen), true)};
  if (!is_subgroup(g, s.kernel.members()) || !is_subgroup(g, s.center.members())) {
    throw InternalError("character kernel or center is not a subgroup");
  }
  return s;
}

std::vector<std::uint64_t> degree_set(const CharacterTable& t) {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < t.size(); ++r) out.push_back(t.degree(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> irr_over(const CharacterTable& t, const Subgroup& m) {
  if (!is_subgroup(t.group(), m.members()) || !is_normal_subset(t.group(), m)) {
    throw InputError("irr_over: M is not a normal subgroup");
  }
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (!m.is_subset_of(t.structure(r).kernel)) out.push_back(r);
  }
  return out;
}

std::size_t kernel_multiplicity(const CharacterTable& t, const Subgroup& n) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t.structure(r).kernel == n) ++count;
  }
  return count;
}

std::size_t faithful_count(const CharacterTable& t) {
  return kernel_multiplicity(t, Subgroup::trivial());
}

OrthogonalityReport check_orthogonality(const CharacterTable& t) {
  OrthogonalityReport report;
  const auto& rows = t.rows();
  const std::size_t k = t.class_count();
  const auto n = static_cast<std::int64_t>(t.group().order());
  report.shape = rows.size() == k &&
                 std::all_of(rows.begin(), rows.end(), [&](const CharacterRow& r) { return r.size() == k; });
  if (!report.shape) return report;

  std::uint64_t conductor = 1;
  for (const auto& r : rows) {
    for (const auto& v : r) conductor = lcm_u64(conductor, v.conductor());
  }
  const PairingChecker checker(rows, conductor);

  std::vector<std::int64_t> class_sizes(k);
  for (std::size_t i = 0; i < k; ++i) class_sizes[i] = static_cast<std::int64_t>(t.classes()[i].size());
  const std::vector<std::int64_t> ones(k, 1);

  report.rows = true;
  for (std::size_t a = 0; a < k && report.rows; ++a) {
    for (std::size_t b = a; b < k && report.rows; ++b) {
      report.rows = checker.equals(
          k, [&](std::size_t i) { return std::array<std::size_t, 4>{a, i, b, i}; }, class_sizes,
          a == b ? n : 0);
    }
  }
  report.columns = true;
  for (std::size_t i = 0; i < k && report.columns; ++i) {
    for (std::size_t j = i; j < k && report.columns; ++j) {
      const auto target = i == j ? static_cast<std::int64_t>(t.classes()[i].centralizer_order) : 0;
      report.columns = checker.equals(
          k, [&](std::size_t r) { return std::array<std::size_t, 4>{r, i, r, j}; }, ones, target);
    }
  }

  report.degree_sum = true;
  report.degrees_divide = true;
  std::int64_t sum = 0;
  for (const auto& r : rows) {
    auto q = r[0].rational_value();
    if (!q || q->get_den() != 1 || sgn(*q) <= 0 || !q->get_num().fits_slong_p()) {
      report.degree_sum = report.degrees_divide = false;
      return report;
    }
    const long d = q->get_num().get_si();
    sum += d * d;
    if (n % d != 0) report.degrees_divide = false;
  }
  report.degree_sum = sum == n;
  return report;
}

}  // namespace grouplab
