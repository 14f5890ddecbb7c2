#include "msub/mathieu.hpp"

#include "msub/idempotent.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace msub {

namespace {

std::uint64_t checked_space_size(Field f, std::size_t n) {
  if (!f.is_prime_field()) throw PreconditionViolated("exhaustive enumeration needs a prime field");
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    total *= p;
    if (total > kEnumerationLimit) throw TooLarge("p^(n^2) exceeds the enumeration limit of 2^20");
  }
  return total;
}

// Runs fn(begin, end) on contiguous chunks of [0, count) and returns the chunk
// results in index order.
template <class Fn>
auto run_chunks(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}, std::size_t{}))> {
  using R = decltype(fn(std::size_t{}, std::size_t{}));
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks = std::min<std::size_t>(hw, std::max<std::size_t>(1, count / 64));
  std::vector<R> out;
  if (chunks <= 1) {
    out.push_back(fn(0, count));
    return out;
  }
  std::vector<std::future<R>> futures;
  const std::size_t step = (count + chunks - 1) / chunks;
  for (std::size_t lo = 0; lo < count; lo += step)
    futures.push_back(std::async(std::launch::async, fn, lo, std::min(count, lo + step)));
  for (auto& fu : futures) out.push_back(fu.get());
  return out;
}

// Membership through the trace pairing against a constraint basis.
class Membership {
 public:
  explicit Membership(const MatrixSubspace& m) : constraints_(constraint_space(m).basis()) {}
  bool operator()(const DenseMatrix& x) const {
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const DenseMatrix& c) { return trace_pairing(c, x).is_zero(); });
  }

 private:
  std::vector<DenseMatrix> constraints_;
};

std::vector<std::uint32_t> residues(const DenseMatrix& m) {
  std::vector<std::uint32_t> out;
  out.reserve(m.entries().size());
  for (const auto& s : m.entries()) out.push_back(s.residue());
  return out;
}

DenseMatrix matrix_at(Field f, std::size_t n, std::uint64_t idx) {
  const std::uint64_t p = f.characteristic();
  DenseMatrix m(f, n, n);
  for (std::size_t k = n * n; k-- > 0;) {
    m(k / n, k % n) = Scalar(f, static_cast<long>(idx % p));
    idx /= p;
  }
  return m;
}

DenseMatrix element_at(const MatrixSubspace& s, std::uint64_t idx) {
  const Field f = s.field();
  const std::uint64_t p = f.characteristic();
  Vector coords(s.dim(), Scalar::zero(f));
  for (std::size_t k = s.dim(); k-- > 0;) {
    coords[k] = Scalar(f, static_cast<long>(idx % p));
    idx /= p;
  }
  return s.element(coords);
}

std::uint64_t element_count(const MatrixSubspace& s) {
  checked_space_size(s.field(), s.n());
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) c *= s.field().characteristic();
  return c;
}

std::vector<DenseMatrix> matrix_units(Field f, std::size_t n) {
  std::vector<DenseMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.push_back(DenseMatrix::unit(f, n, i, j));
  return out;
}

template <class Pred>
std::vector<DenseMatrix> filter_all_matrices(Field f, std::size_t n, Pred keep) {
  const std::uint64_t total = checked_space_size(f, n);
  auto parts = run_chunks(total, [&](std::size_t lo, std::size_t hi) {
    std::vector<DenseMatrix> found;
    for (std::size_t i = lo; i < hi; ++i) {
      DenseMatrix a = matrix_at(f, n, i);
      if (keep(a)) found.push_back(std::move(a));
    }
    return found;
  });
  std::vector<DenseMatrix> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

bool all_powers_in(const PowerTrajectory& tr, const Membership& in) {
  return std::all_of(tr.tail.begin(), tr.tail.end(), in) && std::all_of(tr.cycle.begin(), tr.cycle.end(), in);
}

std::optional<MathieuWitness> check_candidate(const DenseMatrix& a, const PowerTrajectory& tr, MathieuType type,
                                              const std::vector<DenseMatrix>& units, const Membership& in) {
  const std::uint64_t base = tr.tail_length() + 1;
  auto left = [&]() -> std::optional<MathieuWitness> {
    for (std::size_t idx = 0; idx < tr.cycle.size(); ++idx)
      for (const auto& b : units)
        if (!in(b * tr.cycle[idx])) return MathieuWitness{a, b, std::nullopt, base + idx};
    return std::nullopt;
  };
  auto right = [&]() -> std::optional<MathieuWitness> {
    for (std::size_t idx = 0; idx < tr.cycle.size(); ++idx)
      for (const auto& c : units)
        if (!in(tr.cycle[idx] * c)) return MathieuWitness{a, std::nullopt, c, base + idx};
    return std::nullopt;
  };
  switch (type) {
    case MathieuType::left:
      return left();
    case MathieuType::right:
      return right();
    case MathieuType::pre_two_sided:
      if (auto w = left()) return w;
      return right();
    case MathieuType::two_sided:
      for (std::size_t idx = 0; idx < tr.cycle.size(); ++idx)
        for (const auto& b : units) {
          const DenseMatrix bx = b * tr.cycle[idx];
          for (const auto& c : units)
            if (!in(bx * c)) return MathieuWitness{a, b, c, base + idx};
        }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(MathieuType t) {
  switch (t) {
    case MathieuType::left:
      return "left";
    case MathieuType::right:
      return "right";
    case MathieuType::pre_two_sided:
      return "pre_two_sided";
    case MathieuType::two_sided:
      return "two_sided";
  }
  return "?";
}

MathieuType parse_mathieu_type(const std::string& s) {
  if (s == "left") return MathieuType::left;
  if (s == "right") return MathieuType::right;
  if (s == "pre2" || s == "pre_two_sided") return MathieuType::pre_two_sided;
  if (s == "two" || s == "two_sided") return MathieuType::two_sided;
  throw std::invalid_argument("unknown Mathieu type: " + s);
}

const DenseMatrix& PowerTrajectory::power(std::uint64_t m) const {
  if (m == 0) throw std::out_of_range("powers start at 1");
  if (m <= tail.size()) return tail[m - 1];
  return cycle[(m - tail.size() - 1) % cycle.size()];
}

PowerTrajectory power_trajectory(const DenseMatrix& a) {
  if (!a.field().is_prime_field()) throw PreconditionViolated("power trajectories need a prime field");
  if (!a.is_square()) throw DimensionMismatch("power trajectory of a non-square matrix");
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  std::vector<DenseMatrix> powers;
  DenseMatrix cur = a;
  while (true) {
    auto [it, fresh] = seen.emplace(residues(cur), powers.size());
    if (!fresh) {
      const std::size_t start = it->second;
      PowerTrajectory tr{a, {}, {}};
      tr.tail.assign(powers.begin(), powers.begin() + static_cast<std::ptrdiff_t>(start));
      tr.cycle.assign(powers.begin() + static_cast<std::ptrdiff_t>(start), powers.end());
      return tr;
    }
    powers.push_back(cur);
    cur = cur * a;
  }
}

std::vector<DenseMatrix> elements(const MatrixSubspace& s) {
  const std::uint64_t count = element_count(s);
  std::vector<DenseMatrix> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(element_at(s, i));
  return out;
}

std::vector<DenseMatrix> radical(const MatrixSubspace& s) {
  const Membership in(s);
  return filter_all_matrices(s.field(), s.n(), [&](const DenseMatrix& a) {
    const auto tr = power_trajectory(a);
    return std::all_of(tr.cycle.begin(), tr.cycle.end(), in);
  });
}

std::vector<DenseMatrix> full_power_set(const MatrixSubspace& s) {
  const Membership in(s);
  std::vector<DenseMatrix> out;
  for (auto& a : elements(s))
    if (all_powers_in(power_trajectory(a), in)) out.push_back(std::move(a));
  return out;
}

MathieuVerdict verify_mathieu(const MatrixSubspace& m, MathieuType type) {
  const std::uint64_t count = element_count(m);
  const Membership in(m);
  const auto units = matrix_units(m.field(), m.n());
  auto parts = run_chunks(count, [&](std::size_t lo, std::size_t hi) -> std::optional<MathieuWitness> {
    for (std::size_t i = lo; i < hi; ++i) {
      const DenseMatrix a = element_at(m, i);
      const auto tr = power_trajectory(a);
      if (!all_powers_in(tr, in)) continue;
      if (auto w = check_candidate(a, tr, type, units, in)) return w;
    }
    return std::nullopt;
  });
  MathieuVerdict v;
  v.type = type;
  for (auto& w : parts) {
    if (w) {
      v.holds = false;
      v.witness = std::move(w);
      break;
    }
  }
  return v;
}

bool replay_witness(const MatrixSubspace& m, const MathieuWitness& w) {
  if (!w.b && !w.c) return false;
  // Direct iteration until the first repeated power.
  std::vector<DenseMatrix> powers{w.a};
  std::size_t repeat_from = 0;
  while (true) {
    DenseMatrix next = powers.back() * w.a;
    auto it = std::find(powers.begin(), powers.end(), next);
    if (it != powers.end()) {
      repeat_from = static_cast<std::size_t>(it - powers.begin());
      break;
    }
    powers.push_back(std::move(next));
  }
  const std::size_t period = powers.size() - repeat_from;
  for (const auto& x : powers)
    if (!m.contains(x)) return false;
  auto product_escapes = [&](std::uint64_t e) {
    DenseMatrix x = w.a.pow(e);
    if (w.b) x = *w.b * x;
    if (w.c) x = x * *w.c;
    return !m.contains(x);
  };
  return w.exponent > repeat_from && product_escapes(w.exponent) && product_escapes(w.exponent + period) &&
         product_escapes(w.exponent + 2 * period);
}

MatrixSubspace proposition_family(Field f, std::size_t n, const Scalar& a_param) {
  if (n < 1) throw PreconditionViolated("n must be positive");
  if (a_param.field() != f) throw FieldMismatch("a-parameter lies in another field");
  const std::uint32_t p = f.characteristic();
  if (p != 0 && p < n) throw PreconditionViolated("characteristic lies in 1..n-1");
  if (p != 0 && (p == n || p == n + 1))
    throw PreconditionViolated("K is the prime field F_p with p in {n, n+1}");
  if (!a_param.is_one()) throw PreconditionViolated("only the a-parameter 1 is supported");

  // tr(C M) = M_nj for C = E_jn; tr M + a M_nn for C = I + a E_nn.
  std::vector<DenseMatrix> cons;
  for (std::size_t j = 0; j + 1 < n; ++j) cons.push_back(DenseMatrix::unit(f, n, j, n - 1));
  cons.push_back(DenseMatrix::identity(f, n) + a_param * DenseMatrix::unit(f, n, n - 1, n - 1));
  return constraint_space(MatrixSubspace::span(f, n, cons));
}

Vector newton_char_poly(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const Field f = a.field();
  const std::size_t n = a.rows();
  if (f.characteristic() != 0 && f.characteristic() <= n)
    throw PreconditionViolated("Newton's identities need chr K = 0 or chr K > n");

  Vector power_sums(n + 1, Scalar::zero(f));
  DenseMatrix pw = DenseMatrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    pw = pw * a;
    power_sums[k] = pw.trace();
  }
  Vector e(n + 1, Scalar::zero(f));
  e[0] = Scalar::one(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = 1; i <= k; ++i) {
      const Scalar term = e[k - i] * power_sums[i];
      if (i % 2 == 1) acc += term;
      else acc -= term;
    }
    e[k] = acc / Scalar(f, static_cast<long>(k));
  }
  Vector coeffs(n + 1, Scalar::zero(f));
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = k % 2 == 0 ? e[k] : -e[k];
  return coeffs;
}

PrelmReport prelm_chain_check(const MatrixSubspace& m) {
  for (const auto& b : m.basis())
    if (!b.trace().is_zero()) throw PreconditionViolated("m contains a matrix of nonzero trace");
  const std::size_t n = m.n();
  const std::uint32_t p = m.field().characteristic();
  checked_space_size(m.field(), n);

  PrelmReport r;
  r.chr_outside_1_to_n = p > n;
  r.chr_outside_1_to_n_minus_1_and_i_notin = p >= n && !m.contains_identity();

  const Membership in(m);
  r.radical_nilpotent = true;
  r.bound_verified = true;
  for (const auto& a : radical(m)) {
    if (!is_nilpotent(a)) r.radical_nilpotent = false;
    const auto tr = power_trajectory(a);
    std::size_t first = 1;
    for (std::size_t i = tr.tail.size(); i-- > 0;) {
      if (!in(tr.tail[i])) {
        first = i + 2;
        break;
      }
    }
    const std::uint64_t bound = static_cast<std::uint64_t>(n) * first;
    r.nilpotency_bound = std::max(r.nilpotency_bound, bound);
    if (!tr.power(bound).is_zero()) r.bound_verified = false;
  }
  r.two_sided_mathieu = verify_mathieu(m, MathieuType::two_sided).holds;
  r.implications_hold = (!r.chr_outside_1_to_n || r.chr_outside_1_to_n_minus_1_and_i_notin) &&
                        (!r.chr_outside_1_to_n_minus_1_and_i_notin || r.radical_nilpotent) &&
                        (!r.radical_nilpotent || r.two_sided_mathieu);
  return r;
}

MatrixSubspace max_left_ideal(const MatrixSubspace& m) {
  const std::size_t n = m.n();
  const Field f = m.field();
  // tr(C E_ij A) = sum_a C_ai A_ja for every constraint C and all i, j.
  const auto cons = constraint_space(m).basis();
  DenseMatrix sys(f, std::max<std::size_t>(1, cons.size() * n * n), n * n);
  std::size_t row = 0;
  for (const auto& c : cons)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row)
        for (std::size_t a = 0; a < n; ++a) sys(row, j * n + a) = c(a, i);
  return MatrixSubspace(n, kernel(sys));
}

RadNormalForm rad_normal_form(const MatrixSubspace& ideal) {
  const std::size_t n = ideal.n();
  const Field f = ideal.field();
  const auto basis = ideal.basis();
  for (const auto& mtx : basis)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!ideal.contains(DenseMatrix::unit(f, n, a, b) * mtx)) throw NotLeftIdeal();

  DenseMatrix stacked(f, 0, n);
  for (const auto& mtx : basis) stacked = stacked.stacked(mtx);
  const VectorSubspace common = kernel(stacked.rows() == 0 ? DenseMatrix(f, 1, n) : stacked);
  const std::size_t k = n - common.dim();

  std::vector<Vector> completion;
  VectorSubspace spanned = common;
  for (std::size_t i = 0; i < n && completion.size() < k; ++i) {
    Vector e = unit_vector(f, n, i);
    if (spanned.contains(e)) continue;
    spanned = sum(spanned, VectorSubspace::span(f, n, {e}));
    completion.push_back(std::move(e));
  }
  DenseMatrix t(f, n, n);
  for (std::size_t j = 0; j < k; ++j) t.set_col(j, completion[j]);
  const auto kv = common.basis_vectors();
  for (std::size_t j = 0; j < kv.size(); ++j) t.set_col(k + j, kv[j]);

  const MatrixSubspace target = block_zero_subspace(MatrixSubspace::full(f, n), 0, k, n, n - k);
  if (!(conjugate(ideal, t) == target)) throw InternalError("conjugated ideal is not the column-kill space");

  DenseMatrix d(f, n, n);
  for (std::size_t i = 0; i < k; ++i) d(i, i) = Scalar::one(f);
  const DenseMatrix e = t * d * invert(t);
  std::vector<DenseMatrix> generated;
  for (const auto& u : matrix_units(f, n)) generated.push_back(u * e);
  if (!is_idempotent(e) || !ideal.contains(e) || !(MatrixSubspace::span(f, n, generated) == ideal))
    throw InternalError("conjugated diag(I_k, 0) does not generate the ideal");
  return RadNormalForm{t, k, e};
}

std::vector<DenseMatrix> idempotents_of(const MatrixSubspace& m) {
  std::vector<DenseMatrix> out;
  for (auto& e : elements(m))
    if (is_idempotent(e)) out.push_back(std::move(e));
  return out;
}

RadReport rad_equivalences(const MatrixSubspace& m) {
  RadReport r;
  r.ideal = max_left_ideal(m);
  r.k = r.ideal.dim() / m.n();
  r.left_mathieu = verify_mathieu(m, MathieuType::left).holds;
  const auto idem = idempotents_of(m);
  r.ideal_contains_idempotents =
      std::all_of(idem.begin(), idem.end(), [&](const DenseMatrix& e) { return r.ideal.contains(e); });
  r.radicals_equal = radical(m) == radical(r.ideal);
  r.equivalent = r.left_mathieu == r.ideal_contains_idempotents && r.ideal_contains_idempotents == r.radicals_equal;
  return r;
}

Cor62Report cor62_check(const MatrixSubspace& m) {
  if (m.codim() == 0 || m.codim() >= m.n()) throw PreconditionViolated("codimension must lie in 1..n-1");
  checked_space_size(m.field(), m.n());
  Cor62Report r;
  r.left_mathieu = verify_mathieu(m, MathieuType::left).holds;
  r.two_sided_mathieu = verify_mathieu(m, MathieuType::two_sided).holds;
  r.field_larger_than_two = m.field().characteristic() > 2;
  r.consistent = !r.left_mathieu || (r.two_sided_mathieu && r.field_larger_than_two);
  return r;
}

}  // namespace msub
