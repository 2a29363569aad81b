#include "workbench/torus.hpp"

#include <algorithm>
#include <numeric>

namespace workbench {

namespace {

// Multiply polynomials over F_p, reduce modulo the monic poly `mod` (degree
// f, coefficient vector of length f for the non-leading terms).
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, long long p) {
  size_t f = mod.size();
  std::vector<int> prod(2 * f, 0);
  for (size_t i = 0; i < f; ++i)
    for (size_t j = 0; j < f; ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1LL * a[i] * b[j]) % p);
  for (size_t d = 2 * f; d-- > f;) {
    int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (size_t i = 0; i < f; ++i)
      prod[d - f + i] =
          static_cast<int>(((prod[d - f + i] - 1LL * c * mod[i]) % p + p) % p);
  }
  prod.resize(f);
  return prod;
}

long long poly_index(const std::vector<int>& a, long long p) {
  long long idx = 0;
  for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

}  // namespace

Fq::Fq(long long p, long long f) : p_(p), f_(f) {
  q_ = 1;
  for (long long i = 0; i < f; ++i) q_ *= p;
  if (q_ > (1 << 16)) throw std::invalid_argument("q exceeds 2^16");
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  if (f == 1) {
    // Primitive root mod p.
    auto order_ok = [&](long long g) {
      long long m = p - 1;
      for (long long d = 2; d * d <= m; ++d) {
        if (m % d) continue;
        long long e1 = d, e2 = m / d;
        for (long long e : {e1, e2}) {
          long long r = 1, b = g, ee = e;
          while (ee) {
            if (ee & 1) r = r * b % p;
            b = b * b % p;
            ee >>= 1;
          }
          if (r == 1 && e != m) return false;
        }
      }
      return true;
    };
    long long g = 1;
    if (p > 2) {
      for (g = 2; g < p; ++g)
        if (order_ok(g)) break;
    }
    long long cur = 1;
    for (long long e = 0; e < p - 1; ++e) {
      exp_[e] = static_cast<int>(cur);
      log_[cur] = e;
      cur = cur * g % p;
    }
  } else {
    // Search for a primitive polynomial: x must have multiplicative order
    // q-1 modulo it; then g = x and the exp table is built by shifting.
    std::vector<int> mod(f, 0);
    bool found = false;
    std::vector<long long> digits(f, 0);
    while (!found) {
      // next candidate coefficient vector
      size_t i = 0;
      while (i < static_cast<size_t>(f) && digits[i] == p - 1) digits[i++] = 0;
      if (i == static_cast<size_t>(f))
        throw std::runtime_error("no primitive polynomial found");
      ++digits[i];
      for (long long j = 0; j < f; ++j) mod[j] = static_cast<int>(digits[j]);
      if (mod[0] == 0) continue;  // must not be divisible by x
      // Walk powers of x; primitive iff the first return to 1 is at q-1.
      std::vector<int> x(f, 0);
      x[1] = 1;
      std::vector<int> cur(f, 0);
      cur[0] = 1;
      long long steps = 0;
      bool ok = true;
      std::vector<int> one(f, 0);
      one[0] = 1;
      do {
        cur = poly_mulmod(cur, x, mod, p);
        ++steps;
        if (steps > q_ - 1) {
          ok = false;
          break;
        }
      } while (cur != one);
      if (ok && steps == q_ - 1) found = true;
    }
    std::vector<int> x(f, 0);
    x[1] = 1;
    std::vector<int> cur(f, 0);
    cur[0] = 1;
    for (long long e = 0; e < q_ - 1; ++e) {
      long long idx = poly_index(cur, p);
      exp_[e] = static_cast<int>(idx);
      log_[idx] = e;
      cur = poly_mulmod(cur, x, mod, p);
    }
  }
}

int Fq::add(int a, int b) const {
  long long r = 0, mul = 1;
  long long aa = a, bb = b;
  for (long long i = 0; i < f_; ++i) {
    long long da = aa % p_, db = bb % p_;
    r += ((da + db) % p_) * mul;
    mul *= p_;
    aa /= p_;
    bb /= p_;
  }
  return static_cast<int>(r);
}

int Fq::neg(int a) const {
  long long r = 0, mul = 1;
  long long aa = a;
  for (long long i = 0; i < f_; ++i) {
    long long da = aa % p_;
    r += ((p_ - da) % p_) * mul;
    mul *= p_;
    aa /= p_;
  }
  return static_cast<int>(r);
}

int Fq::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

int Fq::inv(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int Fq::from_int(long long n) const {
  // Prime-subfield elements are exactly the indices below p.
  return static_cast<int>(((n % p_) + p_) % p_);
}

int Fq::gen_pow(long long e) const {
  long long m = q_ - 1;
  return exp_[((e % m) + m) % m];
}

long long Fq::log(int a) const {
  if (a == 0) throw std::invalid_argument("log of zero");
  return log_[a];
}

TorusRing tr_scale(long long c, const TorusRing& a) {
  TorusRing out;
  if (c == 0) return out;
  for (const auto& [k, v] : a) out[k] = c * v;
  return out;
}

TorusRing tr_add(const TorusRing& a, const TorusRing& b) {
  TorusRing out = a;
  for (const auto& [k, v] : b) {
    auto it = out.find(k);
    if (it == out.end()) {
      if (v != 0) out[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

long long tr_coeff_sum(const TorusRing& a) {
  long long s = 0;
  for (const auto& [k, v] : a) s += v;
  return s;
}

TorusCover::TorusCover(const BasedRootDatum& rd, const AffineWeyl& weyl)
    : rd_(&rd), weyl_(&weyl), fq_(rd.p(), rd.f()), rank_(rd.rank()) {
  qm1_ = fq_.q() - 1;
  build_cocycle_table();
  // Pinned lifts for every positive root, eagerly.
  size_t n = rd.positive_roots().size();
  pinned_.assign(n, ProPElement{});
  pinned_done_.assign(n, 0);
  for (size_t r = 0; r < n; ++r) pinned_reflection_lift(static_cast<int>(r));
}

TorusElement TorusCover::torus_identity() const {
  return TorusElement{std::vector<int>(rank_, 0)};
}

TorusElement TorusCover::torus_mul(const TorusElement& a,
                                   const TorusElement& b) const {
  TorusElement out = a;
  for (int i = 0; i < rank_; ++i)
    out.e[i] = static_cast<int>((out.e[i] + b.e[i]) % qm1_);
  return out;
}

TorusElement TorusCover::torus_inv(const TorusElement& a) const {
  TorusElement out = a;
  for (int i = 0; i < rank_; ++i)
    out.e[i] = static_cast<int>(((qm1_ - a.e[i]) % qm1_));
  return out;
}

TorusElement TorusCover::torus_reduce(std::vector<long long> raw) const {
  TorusElement out{std::vector<int>(rank_, 0)};
  for (int i = 0; i < rank_; ++i)
    out.e[i] = static_cast<int>(((raw[i] % qm1_) + qm1_) % qm1_);
  return out;
}

TorusElement TorusCover::covee_power(const Vec& covee, long long e) const {
  std::vector<long long> raw(rank_);
  for (int i = 0; i < rank_; ++i) raw[i] = covee[i] * e;
  return torus_reduce(raw);
}

TorusElement TorusCover::minus_one_of_coroot(const Vec& covee) const {
  long long e = (qm1_ % 2 == 0) ? qm1_ / 2 : 0;
  return covee_power(covee, e);
}

std::vector<TorusElement> TorusCover::all_torus_elements() const {
  std::vector<TorusElement> out;
  TorusElement t = torus_identity();
  while (true) {
    out.push_back(t);
    int i = 0;
    while (i < rank_ && t.e[i] == qm1_ - 1) t.e[i++] = 0;
    if (i == rank_) break;
    ++t.e[i];
  }
  return out;
}

TorusElement TorusCover::act(int w0, const TorusElement& t) const {
  Vec x(rank_);
  for (int i = 0; i < rank_; ++i) x[i] = t.e[i];
  Vec y = rd_->w0().act_costar(w0, x);
  std::vector<long long> raw(y.begin(), y.end());
  return torus_reduce(raw);
}

TorusRing TorusCover::act(int w0, const TorusRing& c) const {
  TorusRing out;
  for (const auto& [k, v] : c) out[act(w0, k)] += v;
  return out;
}

void TorusCover::build_cocycle_table() {
  const auto& w0 = rd_->w0();
  int n = w0.size();
  cocycle_.assign(static_cast<size_t>(n) * n, torus_identity());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      TorusElement t = torus_identity();
      int cur = a;
      for (int j : w0.word(b)) {
        int nxt = w0.mult(cur, w0.gen(j));
        if (w0.length(nxt) < w0.length(cur)) {
          // n(cur) n_s = n(nxt) alpha_s^vee(-1); normalize torus to the left.
          TorusElement corr = minus_one_of_coroot(rd_->simple_coroot(j));
          t = torus_mul(t, act(nxt, corr));
        }
        cur = nxt;
      }
      cocycle_[static_cast<size_t>(a) * n + b] = t;
    }
  }
}

TorusElement TorusCover::tits_cocycle(int w1, int w2) const {
  return cocycle_[static_cast<size_t>(w1) * rd_->w0().size() + w2];
}

ProPElement TorusCover::identity() const {
  return ProPElement{Vec(rank_, 0), torus_identity(), rd_->w0().identity()};
}

ProPElement TorusCover::from_torus(const TorusElement& t) const {
  return ProPElement{Vec(rank_, 0), t, rd_->w0().identity()};
}

ProPElement TorusCover::multiply(const ProPElement& a,
                                 const ProPElement& b) const {
  const auto& w0 = rd_->w0();
  return ProPElement{
      vec_add(a.nu, w0.act_costar(a.w0, b.nu)),
      torus_mul(torus_mul(a.t, act(a.w0, b.t)), tits_cocycle(a.w0, b.w0)),
      w0.mult(a.w0, b.w0)};
}

ProPElement TorusCover::inverse(const ProPElement& a) const {
  const auto& w0 = rd_->w0();
  int wi = w0.inverse(a.w0);
  TorusElement t =
      torus_inv(torus_mul(act(wi, a.t), tits_cocycle(wi, a.w0)));
  return ProPElement{vec_neg(w0.act_costar(wi, a.nu)), t, wi};
}

ProPElement TorusCover::power(const ProPElement& a, long long n) const {
  ProPElement base = n >= 0 ? a : inverse(a);
  long long m = std::abs(n);
  ProPElement acc = identity();
  for (long long i = 0; i < m; ++i) acc = multiply(acc, base);
  return acc;
}

AffWeylElement TorusCover::project(const ProPElement& a) const {
  return AffWeylElement{a.nu, a.w0};
}

ProPElement TorusCover::lift(const AffWeylElement& w) const {
  return ProPElement{w.nu, torus_identity(), w.w0};
}

long long TorusCover::length(const ProPElement& a) const {
  return weyl_->length(project(a));
}

ProPElement TorusCover::pinned_reflection_lift(int root_index) const {
  if (pinned_done_[root_index]) return pinned_[root_index];
  const auto& positives = rd_->positive_roots();
  const RootPair& rp = positives[root_index];
  ProPElement out;
  bool simple = false;
  for (int j = 0; j < rd_->num_simple(); ++j)
    if (rp.root == rd_->simple_root(j)) {
      out = ProPElement{Vec(rank_, 0), torus_identity(), rd_->w0().gen(j)};
      simple = true;
      break;
    }
  if (!simple) {
    // Find a simple reflection lowering the height and conjugate the pinned
    // lift of the lowered root.
    int j_found = -1, target = -1;
    for (int j = 0; j < rd_->num_simple() && j_found < 0; ++j) {
      long long c = pairing(rp.root, rd_->simple_coroot(j));
      if (c <= 0) continue;
      Vec lowered = vec_sub(rp.root, vec_scale(c, rd_->simple_root(j)));
      for (size_t r = 0; r < positives.size(); ++r)
        if (positives[r].root == lowered &&
            positives[r].height < rp.height) {
          j_found = j;
          target = static_cast<int>(r);
          break;
        }
    }
    if (j_found < 0)
      throw std::runtime_error("cannot lower a non-simple positive root");
    ProPElement nj{Vec(rank_, 0), torus_identity(), rd_->w0().gen(j_found)};
    ProPElement inner = pinned_reflection_lift(target);
    out = multiply(multiply(nj, inner), inverse(nj));
  }
  pinned_[root_index] = out;
  pinned_done_[root_index] = 1;
  return out;
}

ProPElement TorusCover::lift_simple(int s) const {
  const SAffGen& g = weyl_->saff()[s];
  const RootPair& rp = rd_->positive_roots()[g.root_index];
  ProPElement tr = lift(weyl_->translation(
      Coweight{vec_scale(-g.level, rp.coroot)}));
  return multiply(tr, pinned_reflection_lift(g.root_index));
}

std::vector<TorusElement> TorusCover::z_k_s(int root_index) const {
  const Vec& covee = rd_->positive_roots()[root_index].coroot;
  std::set<TorusElement> seen;
  for (long long e = 0; e < qm1_; ++e) seen.insert(covee_power(covee, e));
  return {seen.begin(), seen.end()};
}

TorusRing TorusCover::c_of_lift(const ProPElement& s_tilde) const {
  AffWeylElement tau = project(s_tilde);
  if (!weyl_->is_reflection(tau))
    throw std::invalid_argument("c is defined on lifts of affine reflections");
  auto [root_index, level] = weyl_->reflection_data(tau);
  const RootPair& rp = rd_->positive_roots()[root_index];
  ProPElement adm = multiply(
      lift(weyl_->translation(Coweight{vec_scale(-level, rp.coroot)})),
      pinned_reflection_lift(root_index));
  ProPElement twist = multiply(s_tilde, inverse(adm));
  if (!vec_is_zero(twist.nu) || twist.w0 != rd_->w0().identity())
    throw std::runtime_error("lift does not cover the expected reflection");
  auto zs = z_k_s(root_index);
  long long coeff = qm1_ == 0 ? 1 : qm1_ / static_cast<long long>(zs.size());
  if (qm1_ > 0 && qm1_ % static_cast<long long>(zs.size()) != 0)
    throw std::runtime_error("|Z_{k,s}| does not divide q-1");
  TorusRing out;
  for (const auto& z : zs) out[torus_mul(twist.t, z)] = coeff;
  return out;
}

int TorusCover::character_eval_element(const TorusCharacter& psi,
                                       const TorusElement& t) const {
  long long e = 0;
  for (int i = 0; i < rank_; ++i) e += 1LL * psi.a[i] * t.e[i];
  return fq_.gen_pow(e);
}

int TorusCover::character_eval(const TorusCharacter& psi,
                               const TorusRing& c) const {
  int acc = fq_.zero();
  for (const auto& [t, coeff] : c)
    acc = fq_.add(acc,
                  fq_.mul(fq_.from_int(coeff), character_eval_element(psi, t)));
  return acc;
}

bool TorusCover::character_trivial_on(const TorusCharacter& psi,
                                      const Vec& covee) const {
  long long e = 0;
  for (int i = 0; i < rank_; ++i) e += psi.a[i] * covee[i];
  return e % qm1_ == 0;
}

std::vector<int> TorusCover::delta_prime_psi(const TorusCharacter& psi) const {
  std::vector<int> out;
  for (int j = 0; j < rd_->num_simple(); ++j)
    if (character_trivial_on(psi, rd_->simple_coroot(j))) out.push_back(j);
  return out;
}

std::vector<TorusCharacter> TorusCover::all_characters() const {
  std::vector<TorusCharacter> out;
  TorusCharacter psi{std::vector<int>(rank_, 0)};
  while (true) {
    out.push_back(psi);
    int i = 0;
    while (i < rank_ && psi.a[i] == qm1_ - 1) psi.a[i++] = 0;
    if (i == rank_) break;
    ++psi.a[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial-matrix oracle for GL_n presets.

struct TorusCover::Monomial {
  int n;
  std::vector<char> nz;        // n*n
  std::vector<long long> val;  // valuations
  std::vector<long long> unit; // unit-class exponents mod q-1
};

ProPElement TorusCover::monomial_oracle_mul(const ProPElement& a,
                                            const ProPElement& b) const {
  if (!rd_->is_gl_preset())
    throw std::invalid_argument("monomial oracle needs a GL_n preset");
  int n = rank_;
  long long em1 = (qm1_ % 2 == 0) ? qm1_ / 2 : 0;  // exponent of -1

  auto letter = [&](int i) {
    Monomial m{n, std::vector<char>(n * n, 0), std::vector<long long>(n * n, 0),
               std::vector<long long>(n * n, 0)};
    for (int k = 0; k < n; ++k)
      if (k != i && k != i + 1) m.nz[k * n + k] = 1;
    m.nz[i * n + (i + 1)] = 1;
    m.nz[(i + 1) * n + i] = 1;
    m.unit[(i + 1) * n + i] = em1;
    return m;
  };
  auto mul = [&](const Monomial& x, const Monomial& y) {
    Monomial m{n, std::vector<char>(n * n, 0), std::vector<long long>(n * n, 0),
               std::vector<long long>(n * n, 0)};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (!x.nz[i * n + k]) continue;
        for (int j = 0; j < n; ++j) {
          if (!y.nz[k * n + j]) continue;
          m.nz[i * n + j] = 1;
          m.val[i * n + j] = x.val[i * n + k] + y.val[k * n + j];
          m.unit[i * n + j] =
              (x.unit[i * n + k] + y.unit[k * n + j]) % qm1_;
        }
      }
    return m;
  };
  auto from_prop = [&](const ProPElement& x) {
    Monomial m{n, std::vector<char>(n * n, 0), std::vector<long long>(n * n, 0),
               std::vector<long long>(n * n, 0)};
    for (int i = 0; i < n; ++i) {
      m.nz[i * n + i] = 1;
      m.val[i * n + i] = -x.nu[i];  // v = -nu
      m.unit[i * n + i] = x.t.e[i];
    }
    for (int j : rd_->w0().word(x.w0)) m = mul(m, letter(j));
    return m;
  };
  auto to_prop = [&](const Monomial& m) {
    // m = diag(pi^v) diag(u) N(w0); the Tits lift N(w0) carries its own unit
    // signs, which must be divided out of the extracted diagonal.
    Vec pattern(n * n, 0);
    std::vector<int> cols(n, -1);
    for (int i = 0; i < n; ++i) {
      int cnt = 0;
      for (int j = 0; j < n; ++j)
        if (m.nz[i * n + j]) {
          ++cnt;
          cols[i] = j;
        }
      if (cnt != 1) throw std::runtime_error("not a monomial matrix");
      pattern[i * n + cols[i]] = 1;
    }
    int w0 = rd_->w0().element_with_matrix(pattern);
    if (w0 < 0) throw std::runtime_error("pattern is not a Weyl element");
    Monomial base{n, std::vector<char>(n * n, 0),
                  std::vector<long long>(n * n, 0),
                  std::vector<long long>(n * n, 0)};
    for (int i = 0; i < n; ++i) base.nz[i * n + i] = 1;
    for (int j : rd_->w0().word(w0)) base = mul(base, letter(j));
    Vec nu(n, 0);
    std::vector<int> texp(n, 0);
    for (int i = 0; i < n; ++i) {
      nu[i] = -m.val[i * n + cols[i]];
      long long u = m.unit[i * n + cols[i]] - base.unit[i * n + cols[i]];
      texp[i] = static_cast<int>(((u % qm1_) + qm1_) % qm1_);
    }
    return ProPElement{nu, TorusElement{texp}, w0};
  };

  Monomial ma = from_prop(a), mb = from_prop(b);
  return to_prop(mul(ma, mb));
}

}  // namespace workbench
