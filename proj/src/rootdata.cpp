#include "workbench/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace workbench {

long long pairing(const Vec& chi, const Vec& x) {
  if (chi.size() != x.size())
    throw std::invalid_argument("pairing: dimension mismatch");
  long long s = 0;
  for (size_t i = 0; i < chi.size(); ++i) s += chi[i] * x[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
Vec vec_scale(long long c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

namespace {

// Unique rational solution of sum_i c_i cols[i] = target, as (num, den) pairs
// with den > 0, or nullopt if inconsistent / columns dependent with mismatch.
std::optional<std::vector<std::pair<long long, long long>>> solve_in_basis(
    const std::vector<Vec>& cols, const Vec& target) {
  int m = static_cast<int>(cols.size());
  int d = static_cast<int>(target.size());
  std::vector<std::vector<long long>> A(d, std::vector<long long>(m + 1, 0));
  for (int r = 0; r < d; ++r) {
    for (int i = 0; i < m; ++i) A[r][i] = cols[i][r];
    A[r][m] = target[r];
  }
  int row = 0;
  std::vector<int> pivot_row_of_col(m, -1);
  for (int col = 0; col < m && row < d; ++col) {
    int pr = -1;
    for (int r = row; r < d; ++r)
      if (A[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(A[row], A[pr]);
    for (int r = 0; r < d; ++r) {
      if (r == row || A[r][col] == 0) continue;
      long long a2 = A[row][col], b2 = A[r][col];
      for (int c2 = 0; c2 <= m; ++c2) A[r][c2] = A[r][c2] * a2 - A[row][c2] * b2;
    }
    pivot_row_of_col[col] = row;
    ++row;
  }
  for (int col = 0; col < m; ++col)
    if (pivot_row_of_col[col] < 0) return std::nullopt;
  for (int r = row; r < d; ++r)
    if (A[r][m] != 0) return std::nullopt;
  std::vector<std::pair<long long, long long>> out(m);
  for (int i = 0; i < m; ++i) {
    int r = pivot_row_of_col[i];
    long long num = A[r][m], den = A[r][i];
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    out[i] = {num, den};
  }
  return out;
}

Vec identity_matrix(int d) {
  Vec m(d * d, 0);
  for (int i = 0; i < d; ++i) m[i * d + i] = 1;
  return m;
}

Vec mat_mul(const Vec& a, const Vec& b, int d) {
  Vec r(d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      long long aik = a[i * d + k];
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j) r[i * d + j] += aik * b[k * d + j];
    }
  return r;
}

Vec mat_apply(const Vec& m, const Vec& x, int d) {
  Vec r(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r[i] += m[i * d + j] * x[j];
  return r;
}

// Reflection matrices for s_alpha: on X_*, x -> x - <alpha,x> alpha^vee; on
// X^*, chi -> chi - <chi,alpha^vee> alpha.
Vec reflection_costar(const Vec& alpha, const Vec& covee, int d) {
  Vec m = identity_matrix(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i * d + j] -= covee[i] * alpha[j];
  return m;
}
Vec reflection_star(const Vec& alpha, const Vec& covee, int d) {
  Vec m = identity_matrix(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i * d + j] -= alpha[i] * covee[j];
  return m;
}

}  // namespace

void FiniteWeylGroup::build(int rank, const std::vector<Vec>& simple_roots,
                            const std::vector<Vec>& simple_coroots) {
  rank_ = rank;
  num_gens_ = static_cast<int>(simple_roots.size());
  words_.clear();
  mats_costar_.clear();
  mats_star_.clear();
  index_of_.clear();
  gen_index_.assign(num_gens_, -1);

  std::vector<Vec> gen_costar(num_gens_), gen_star(num_gens_);
  for (int j = 0; j < num_gens_; ++j) {
    gen_costar[j] = reflection_costar(simple_roots[j], simple_coroots[j], rank);
    gen_star[j] = reflection_star(simple_roots[j], simple_coroots[j], rank);
  }

  words_.push_back({});
  mats_costar_.push_back(identity_matrix(rank));
  mats_star_.push_back(identity_matrix(rank));
  index_of_[mats_costar_[0]] = 0;

  // Shortlex BFS: expanding elements in index order and generators in
  // increasing order yields the lexicographically least reduced word first.
  for (size_t head = 0; head < words_.size(); ++head) {
    for (int j = 0; j < num_gens_; ++j) {
      Vec m = mat_mul(mats_costar_[head], gen_costar[j], rank_);
      if (index_of_.count(m)) continue;
      std::vector<int> w = words_[head];
      w.push_back(j);
      index_of_[m] = static_cast<int>(words_.size());
      words_.push_back(std::move(w));
      mats_costar_.push_back(std::move(m));
      mats_star_.push_back(mat_mul(mats_star_[head], gen_star[j], rank_));
    }
    if (words_.size() > 100000)
      throw std::runtime_error("finite Weyl group too large; bad Cartan data?");
  }

  int n = size();
  for (int j = 0; j < num_gens_; ++j)
    gen_index_[j] = index_of_.at(gen_costar[j]);

  mult_table_.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mult_table_[a * n + b] =
          index_of_.at(mat_mul(mats_costar_[a], mats_costar_[b], rank_));

  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mult(a, b) == 0) inv_[a] = b;

  longest_ = 0;
  for (int a = 0; a < n; ++a)
    if (length(a) > length(longest_)) longest_ = a;
  refl_root_.assign(n, -1);
}

Vec FiniteWeylGroup::act_costar(int a, const Vec& x) const {
  return mat_apply(mats_costar_[a], x, rank_);
}
Vec FiniteWeylGroup::act_star(int a, const Vec& chi) const {
  return mat_apply(mats_star_[a], chi, rank_);
}

int FiniteWeylGroup::reflection_index(const Vec& beta,
                                      const Vec& beta_covee) const {
  Vec m = reflection_costar(beta, beta_covee, rank_);
  auto it = index_of_.find(m);
  return it == index_of_.end() ? -1 : it->second;
}

int FiniteWeylGroup::reflection_root(int a) const { return refl_root_[a]; }

void FiniteWeylGroup::set_reflection_roots(
    const std::vector<RootPair>& positives) {
  refl_root_.assign(size(), -1);
  for (size_t r = 0; r < positives.size(); ++r) {
    int idx = reflection_index(positives[r].root, positives[r].coroot);
    if (idx >= 0) refl_root_[idx] = static_cast<int>(r);
  }
}

std::vector<int> FiniteWeylGroup::parabolic_elements(
    const std::vector<int>& J) const {
  std::set<int> seen{identity()};
  std::deque<int> queue{identity()};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int j : J) {
      int b = mult(a, gen(j));
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  return {seen.begin(), seen.end()};
}

int FiniteWeylGroup::longest_element(const std::vector<int>& J) const {
  int best = identity();
  for (int a : parabolic_elements(J))
    if (length(a) > length(best)) best = a;
  return best;
}

int FiniteWeylGroup::element_with_matrix(const Vec& flat) const {
  auto it = index_of_.find(flat);
  return it == index_of_.end() ? -1 : it->second;
}

BasedRootDatum::BasedRootDatum(std::string name, int rank,
                               std::vector<Vec> simple_roots,
                               std::vector<Vec> simple_coroots, long long p,
                               long long f)
    : name_(std::move(name)),
      rank_(rank),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)),
      p_(p),
      f_(f) {
  if (simple_roots_.size() != simple_coroots_.size())
    throw std::invalid_argument("simple roots/coroots size mismatch");
  for (const auto& v : simple_roots_)
    if (static_cast<int>(v.size()) != rank_)
      throw std::invalid_argument("simple root dimension mismatch");
  for (const auto& v : simple_coroots_)
    if (static_cast<int>(v.size()) != rank_)
      throw std::invalid_argument("simple coroot dimension mismatch");
  q_ = 1;
  for (long long i = 0; i < f_; ++i) {
    q_ *= p_;
    if (q_ > (1 << 16)) throw std::invalid_argument("q exceeds 2^16");
  }
  close_positive_roots();
  w0_.build(rank_, simple_roots_, simple_coroots_);
  w0_.set_reflection_roots(positives_);
  find_components();
  two_rho_covee_.assign(rank_, 0);
  for (const auto& rp : positives_)
    two_rho_covee_ = vec_add(two_rho_covee_, rp.coroot);
}

long long BasedRootDatum::cartan(int i, int j) const {
  return pairing(simple_roots_[i], simple_coroots_[j]);
}

void BasedRootDatum::close_positive_roots() {
  // Orbit closure of the simple roots under simple reflections, keeping the
  // positive ones. Root/coroot pairs are transported together.
  std::map<Vec, Vec> seen;  // root -> coroot
  std::deque<std::pair<Vec, Vec>> queue;
  for (size_t i = 0; i < simple_roots_.size(); ++i) {
    seen[simple_roots_[i]] = simple_coroots_[i];
    queue.emplace_back(simple_roots_[i], simple_coroots_[i]);
  }
  while (!queue.empty()) {
    auto [beta, covee] = queue.front();
    queue.pop_front();
    for (size_t j = 0; j < simple_roots_.size(); ++j) {
      long long a = pairing(beta, simple_coroots_[j]);
      long long b = pairing(simple_roots_[j], covee);
      Vec nb = vec_sub(beta, vec_scale(a, simple_roots_[j]));
      Vec nc = vec_sub(covee, vec_scale(b, simple_coroots_[j]));
      if (seen.count(nb)) continue;
      seen[nb] = nc;
      queue.emplace_back(nb, nc);
      if (seen.size() > 4096)
        throw std::runtime_error("root closure does not terminate");
    }
  }
  positives_.clear();
  for (auto& [beta, covee] : seen) {
    auto coeffs = solve_in_basis(simple_roots_, beta);
    if (!coeffs) throw std::runtime_error("root outside simple-root span");
    bool nonneg = true, all_zero = true;
    int height = 0;
    for (auto [num, den] : *coeffs) {
      if (num < 0) nonneg = false;
      if (num != 0) all_zero = false;
      if (num % den != 0)
        throw std::runtime_error("non-integral root coefficient");
      height += static_cast<int>(num / den);
    }
    if (nonneg && !all_zero) {
      if (pairing(beta, covee) != 2)
        throw std::runtime_error("coroot pairing != 2 in closure");
      positives_.push_back(RootPair{beta, covee, height});
    }
  }
  std::sort(positives_.begin(), positives_.end(),
            [](const RootPair& a, const RootPair& b) {
              return std::tie(a.height, a.root) < std::tie(b.height, b.root);
            });
}

void BasedRootDatum::find_components() {
  int m = num_simple();
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> queue{i};
    comp[i] = nc;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < m; ++b)
        if (comp[b] < 0 && cartan(a, b) != 0) {
          comp[b] = nc;
          queue.push_back(b);
        }
    }
    ++nc;
  }
  components_.assign(nc, {});
  for (int i = 0; i < m; ++i) components_[comp[i]].push_back(i);

  // Highest root of a component: the unique positive root in the component
  // of maximal height.
  highest_roots_.assign(nc, -1);
  for (size_t r = 0; r < positives_.size(); ++r) {
    // Determine component by a simple root with nonzero coefficient.
    const Vec& beta = positives_[r].root;
    int c = -1;
    for (int i = 0; i < m && c < 0; ++i) {
      // beta has nonzero alpha_i coefficient iff s_i moves it or beta==alpha_i;
      // cheap test: <beta, alpha_i^vee> != 0 or beta == alpha_i works except
      // for orthogonal sums; use support via elimination-free heuristic:
      if (beta == simple_roots_[i]) c = comp[i];
    }
    if (c < 0) {
      // Non-simple root: find any simple i with <beta, alpha_i^vee> != 0.
      for (int i = 0; i < m && c < 0; ++i)
        if (pairing(beta, simple_coroots_[i]) != 0) c = comp[i];
    }
    if (c < 0) continue;
    if (highest_roots_[c] < 0 ||
        positives_[r].height > positives_[highest_roots_[c]].height)
      highest_roots_[c] = static_cast<int>(r);
  }
}

bool BasedRootDatum::is_dominant(const Coweight& cw) const {
  for (int i = 0; i < num_simple(); ++i)
    if (pairing(simple_roots_[i], cw.nu) > 0) return false;
  return true;
}

std::optional<std::vector<std::pair<long long, long long>>>
BasedRootDatum::coroot_coords_q(const Vec& v) const {
  return solve_in_basis(simple_coroots_, v);
}

std::optional<std::vector<long long>> BasedRootDatum::coroot_coords_int(
    const Vec& v) const {
  auto q = coroot_coords_q(v);
  if (!q) return std::nullopt;
  std::vector<long long> out;
  for (auto [num, den] : *q) {
    if (den != 1) return std::nullopt;
    out.push_back(num);
  }
  return out;
}

std::optional<std::vector<long long>> BasedRootDatum::coroot_coords_nat(
    const Vec& v) const {
  auto z = coroot_coords_int(v);
  if (!z) return std::nullopt;
  for (long long c : *z)
    if (c < 0) return std::nullopt;
  return z;
}

bool BasedRootDatum::preceq(const Coweight& x1, const Coweight& x2) const {
  return coroot_coords_nat(vec_sub(x1.nu, x2.nu)).has_value();
}

Coweight BasedRootDatum::lambda_alpha(int alpha) const {
  return Coweight{simple_coroots_[alpha]};
}

Coweight BasedRootDatum::dominating_shift(const Coweight& z,
                                          const std::vector<int>& J,
                                          const std::vector<long long>& n)
    const {
  // Solve <alpha_j, v(y)> = t_j over the J-coroot span, t_j = max(0, 2n_j -
  // <alpha_j, v(z)>), then scale up to an integral lattice point. The Gram
  // matrix of J is positive definite with entrywise-nonnegative inverse, so
  // the solution has nonnegative coefficients.
  int m = static_cast<int>(J.size());
  Vec vz = z.v();
  std::vector<long long> target(m);
  for (int a = 0; a < m; ++a)
    target[a] = std::max<long long>(0, 2 * n[a] - pairing(simple_roots_[J[a]], vz));
  // Fraction-free solve of C c = target, C_ab = <alpha_{J_a}, alpha_{J_b}^vee>.
  std::vector<std::vector<long long>> A(m, std::vector<long long>(m + 1));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b)
      A[a][b] = pairing(simple_roots_[J[a]], simple_coroots_[J[b]]);
    A[a][m] = target[a];
  }
  for (int col = 0; col < m; ++col) {
    int pr = col;
    while (A[pr][col] == 0) ++pr;
    std::swap(A[col], A[pr]);
    for (int r = 0; r < m; ++r) {
      if (r == col || A[r][col] == 0) continue;
      long long a2 = A[col][col], b2 = A[r][col];
      for (int c2 = 0; c2 <= m; ++c2) A[r][c2] = A[r][c2] * a2 - A[col][c2] * b2;
    }
  }
  Vec vy(rank_, 0);
  for (int a = 0; a < m; ++a) {
    long long num = A[a][m], den = A[a][a];
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long c = (num <= 0) ? 0 : (num + den - 1) / den;  // ceil
    vy = vec_add(vy, vec_scale(c, simple_coroots_[J[a]]));
  }
  return Coweight::from_v(vy);
}

bool BasedRootDatum::dominating_shift_box_check(
    const Coweight& y, const Coweight& z, const std::vector<int>& J,
    const std::vector<long long>& n) const {
  bool full = static_cast<int>(J.size()) == num_simple();
  std::vector<long long> m(J.size(), 0);
  while (true) {
    Vec nu = vec_add(y.nu, z.nu);
    for (size_t a = 0; a < J.size(); ++a)
      nu = vec_add(nu, vec_scale(m[a], simple_coroots_[J[a]]));
    if (full) {
      if (!is_dominant(Coweight{nu})) return false;
    } else {
      for (int j : J)
        if (pairing(simple_roots_[j], nu) > 0) return false;
    }
    size_t a = 0;
    while (a < J.size() && m[a] == n[a]) m[a++] = 0;
    if (a == J.size()) break;
    ++m[a];
  }
  return true;
}

BasedRootDatum BasedRootDatum::levi_subdatum(const std::vector<int>& J) const {
  std::vector<Vec> roots, coroots;
  for (int j : J) {
    if (j < 0 || j >= num_simple())
      throw std::invalid_argument("levi_subdatum: J not a subset of Delta");
    roots.push_back(simple_roots_[j]);
    coroots.push_back(simple_coroots_[j]);
  }
  std::string nm = name_ + "|J=";
  for (int j : J) nm += std::to_string(j);
  return BasedRootDatum(nm, rank_, roots, coroots, p_, f_);
}

long long BasedRootDatum::sum_pos_pairing(const Vec& nu) const {
  long long s = 0;
  for (const auto& rp : positives_) s += pairing(rp.root, nu);
  return s;
}

bool BasedRootDatum::is_gl_preset() const {
  int m = num_simple();
  if (m + 1 != rank_) return false;
  for (int i = 0; i < m; ++i) {
    Vec expect(rank_, 0);
    expect[i] = 1;
    expect[i + 1] = -1;
    if (simple_roots_[i] != expect || simple_coroots_[i] != expect)
      return false;
  }
  return true;
}

void BasedRootDatum::validate() const {
  int m = num_simple();
  for (int i = 0; i < m; ++i) {
    if (cartan(i, i) != 2) throw std::runtime_error("Cartan diagonal != 2");
    for (int j = 0; j < m; ++j) {
      if (i != j && cartan(i, j) > 0)
        throw std::runtime_error("Cartan off-diagonal positive");
      if (i != j && ((cartan(i, j) == 0) != (cartan(j, i) == 0)))
        throw std::runtime_error("Cartan zero pattern not symmetric");
    }
  }
  // Symmetrizability with positive diagonal: find d_i > 0 with
  // d_i C_ij = d_j C_ji, then check positive definiteness of (d_i C_ij).
  std::vector<long long> dnum(m, 0), dden(m, 1);
  for (const auto& comp : components_) {
    dnum[comp[0]] = 1;
    std::deque<int> queue{comp[0]};
    std::set<int> seen{comp[0]};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : comp) {
        if (seen.count(b) || cartan(a, b) == 0) continue;
        // d_b = d_a * C_ab / C_ba
        dnum[b] = dnum[a] * cartan(a, b);
        dden[b] = dden[a] * cartan(b, a);
        if (dnum[b] * dden[b] <= 0)
          throw std::runtime_error("Cartan matrix not symmetrizable > 0");
        seen.insert(b);
        queue.push_back(b);
      }
    }
  }
  long long L = 1;
  for (int i = 0; i < m; ++i) L = std::lcm(L, std::abs(dden[i]));
  std::vector<std::vector<long long>> S(m, std::vector<long long>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) S[i][j] = (dnum[i] * (L / dden[i])) * cartan(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (S[i][j] != S[j][i])
        throw std::runtime_error("symmetrized Cartan not symmetric");
  // Leading principal minors must be positive (fraction-free elimination).
  std::vector<std::vector<long long>> B = S;
  long long prev = 1;
  for (int k = 0; k < m; ++k) {
    if (B[k][k] <= 0) throw std::runtime_error("Cartan not positive definite");
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        B[i][j] = (B[i][j] * B[k][k] - B[i][k] * B[k][j]) / prev;
    prev = B[k][k];
  }
  if (std::gcd(q_ - 1, p_) != 1)
    throw std::runtime_error("gcd(q-1, p) != 1");
  for (const auto& rp : positives_)
    if (pairing(rp.root, rp.coroot) != 2)
      throw std::runtime_error("positive root with <alpha, alpha^vee> != 2");
}

}  // namespace workbench
