#pragma once

#include "workbench/weyl.hpp"

namespace workbench {

// F_q with exp/log tables against a fixed multiplicative generator g.
// Elements are indices in [0, q): the base-p digit expansion of the index
// gives the coordinates in the power basis of a primitive polynomial.
class Fq {
 public:
  Fq(long long p, long long f);
  long long p() const { return p_; }
  long long f() const { return f_; }
  long long q() const { return q_; }

  int zero() const { return 0; }
  int one() const { return 1; }
  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  int from_int(long long n) const;  // n mod p embedded in the prime field
  int gen_pow(long long e) const;   // g^e, e taken mod q-1
  long long log(int a) const;       // discrete log of a nonzero element

 private:
  long long p_, f_, q_;
  std::vector<int> exp_;  // exp_[e] = g^e for e in [0, q-1)
  std::vector<long long> log_;
};

// Element of Z_k = X_* (x) k^*: exponent vector mod (q-1) with respect to a
// fixed generator of k^*.
struct TorusElement {
  std::vector<int> e;
  bool operator==(const TorusElement&) const = default;
  auto operator<=>(const TorusElement&) const = default;
};

// Z[Z_k]: finitely supported integer map on Z_k.
using TorusRing = std::map<TorusElement, long long>;

TorusRing tr_scale(long long c, const TorusRing& a);
TorusRing tr_add(const TorusRing& a, const TorusRing& b);
long long tr_coeff_sum(const TorusRing& a);

// Character of Z_k valued in F_q^*: psi(t) = g^{sum a_i t_i}.
struct TorusCharacter {
  std::vector<int> a;
  bool operator==(const TorusCharacter&) const = default;
  auto operator<=>(const TorusCharacter&) const = default;
};

// Element of the pro-p Iwahori Weyl group W(1) in the normal form
// lambda(pi) . t . n(w0): translation (nu-coordinates), torus part, finite
// part (W_0 index). n(w0) is the braid-multiplicative Tits lift.
struct ProPElement {
  Vec nu;
  TorusElement t;
  int w0 = 0;
  bool operator==(const ProPElement&) const = default;
  auto operator<=>(const ProPElement&) const = default;
};

// W(1) arithmetic, lifts, and the quadratic-relation constants c.
class TorusCover {
 public:
  TorusCover(const BasedRootDatum& rd, const AffineWeyl& weyl);

  const BasedRootDatum& datum() const { return *rd_; }
  const AffineWeyl& weyl() const { return *weyl_; }
  const Fq& fq() const { return fq_; }
  long long qm1() const { return qm1_; }

  TorusElement torus_identity() const;
  TorusElement torus_mul(const TorusElement& a, const TorusElement& b) const;
  TorusElement torus_inv(const TorusElement& a) const;
  TorusElement torus_reduce(std::vector<long long> raw) const;
  // beta^vee (x) u for u = g^e.
  TorusElement covee_power(const Vec& covee, long long e) const;
  TorusElement minus_one_of_coroot(const Vec& covee) const;  // beta^vee(-1)
  std::vector<TorusElement> all_torus_elements() const;

  // Action of W_0 (and of W through its finite part) on Z_k.
  TorusElement act(int w0, const TorusElement& t) const;
  TorusRing act(int w0, const TorusRing& c) const;

  ProPElement identity() const;
  ProPElement from_torus(const TorusElement& t) const;
  ProPElement multiply(const ProPElement& a, const ProPElement& b) const;
  ProPElement inverse(const ProPElement& a) const;
  ProPElement power(const ProPElement& a, long long n) const;

  AffWeylElement project(const ProPElement& a) const;  // drop the torus part
  // Trivial-torus lift of an element of W (uniformizer section on Lambda,
  // Tits section on W_0).
  ProPElement lift(const AffWeylElement& w) const;
  long long length(const ProPElement& a) const;

  // Tits cocycle mu(w1, w2) in Z_k: n(w1) n(w2) = mu . n(w1 w2).
  TorusElement tits_cocycle(int w1, int w2) const;

  // Distinguished lift of a letter of S^aff. For a letter whose finite part
  // is the reflection along beta this is the image of the pinned rank-one
  // subgroup element m(u_beta(pi^r)), so its square lies in Z_k and the
  // quadratic constant below takes the uniform-sum shape on it.
  ProPElement lift_simple(int s) const;
  // Pinned lift m_beta of the finite reflection s_beta (positive root index),
  // built by conjugating a simple pinned lift along a height-reducing chain.
  ProPElement pinned_reflection_lift(int root_index) const;

  // Z_{k,s} = beta^vee(k^*) as a set.
  std::vector<TorusElement> z_k_s(int root_index) const;

  // Quadratic-relation constant of any lift of an affine reflection:
  // c(t . adm) = t . (q-1)/|Z_{k,s}| sum_{z in Z_{k,s}} z.
  TorusRing c_of_lift(const ProPElement& s_tilde) const;

  // Character machinery.
  int character_eval_element(const TorusCharacter& psi,
                             const TorusElement& t) const;  // in F_q
  int character_eval(const TorusCharacter& psi, const TorusRing& c) const;
  bool character_trivial_on(const TorusCharacter& psi, const Vec& covee) const;
  std::vector<int> delta_prime_psi(const TorusCharacter& psi) const;
  std::vector<TorusCharacter> all_characters() const;

  // Monomial-matrix oracle for GL_n presets: independent multiplication in
  // the group of monomial matrices over (valuation, unit-class) pairs.
  ProPElement monomial_oracle_mul(const ProPElement& a,
                                  const ProPElement& b) const;

 private:
  struct Monomial;  // defined in the .cpp
  void build_cocycle_table();

  const BasedRootDatum* rd_;
  const AffineWeyl* weyl_;
  Fq fq_;
  long long qm1_;
  int rank_;
  std::vector<TorusElement> cocycle_;           // w1 * N + w2
  mutable std::vector<ProPElement> pinned_;     // per positive root, lazily
  mutable std::vector<char> pinned_done_;
};

}  // namespace workbench
