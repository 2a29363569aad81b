#pragma once

#include "workbench/rootdata.hpp"

namespace workbench {

// Element of W = Lambda x| W_0: the translation part in nu-coordinates and
// the finite part as an index into the W_0 table. As an affine map of V_ad
// the element acts by x -> w0(x) + nu.
struct AffWeylElement {
  Vec nu;
  int w0 = 0;
  bool operator==(const AffWeylElement&) const = default;
  auto operator<=>(const AffWeylElement&) const = default;
};

// Generator of S^aff: the reflection fixing a wall of the base antidominant
// alcove. root_index points into positive_roots(); level r means the wall
// {<beta, x> = -r}, realized as the element (nu = -r beta^vee, s_beta).
struct SAffGen {
  int root_index;
  long long level;
  AffWeylElement elem;
};

struct AffReducedWord {
  std::vector<int> letters;  // indices into S^aff
  AffWeylElement omega;      // length-zero remainder; evaluating letters then
                             // omega reproduces the source element
};

class AffineWeyl {
 public:
  explicit AffineWeyl(const BasedRootDatum& rd);

  const BasedRootDatum& datum() const { return *rd_; }
  const std::vector<SAffGen>& saff() const { return saff_; }
  int num_saff() const { return static_cast<int>(saff_.size()); }

  AffWeylElement identity() const;
  AffWeylElement translation(const Coweight& cw) const;
  AffWeylElement finite(int w0) const;
  AffWeylElement multiply(const AffWeylElement& a, const AffWeylElement& b) const;
  AffWeylElement inverse(const AffWeylElement& a) const;

  long long length(const AffWeylElement& w) const;
  bool is_left_descent(int s, const AffWeylElement& w) const;
  bool is_right_descent(const AffWeylElement& w, int s) const;

  AffReducedWord reduced_word(const AffWeylElement& w) const;
  std::vector<std::vector<int>> all_reduced_words(const AffWeylElement& w) const;
  AffWeylElement evaluate(const AffReducedWord& word) const;
  AffWeylElement letter(int s) const { return saff_[s].elem; }

  // w = waff * u with u the unique length-zero element of W^aff w.
  std::pair<AffWeylElement, AffWeylElement> omega_decompose(
      const AffWeylElement& w) const;
  AffWeylElement omega_part(const AffWeylElement& w) const;
  bool in_waff(const AffWeylElement& w) const;

  bool bruhat_leq(const AffWeylElement& x, const AffWeylElement& w) const;
  // Brute-force subword oracle (test use).
  bool bruhat_leq_subword_oracle(const AffWeylElement& x,
                                 const AffWeylElement& w) const;
  bool bruhat_leq_dominant(const Coweight& l1, const Coweight& l2) const;

  Coweight dominant_dcoset_rep(const AffWeylElement& w) const;

  // All x <= w, enumerated through subwords of one reduced word.
  std::vector<AffWeylElement> bruhat_interval_below(const AffWeylElement& w) const;

  // Data of the reflection tau = prefix . s . prefix^{-1}: positive root
  // index and wall level, with tau = (nu = -r beta^vee, s_beta).
  std::pair<int, long long> reflection_data(const AffWeylElement& tau) const;
  bool is_reflection(const AffWeylElement& tau) const;

  // Interior point of the base alcove as (vector, denominator).
  const Vec& base_point() const { return base_point_; }
  long long base_denominator() const { return base_den_; }
  Vec apply_to_point(const AffWeylElement& w, const Vec& X) const;

 private:
  const BasedRootDatum* rd_;
  std::vector<SAffGen> saff_;
  Vec base_point_;
  long long base_den_;
  std::set<Vec> positive_root_set_;
};

// Levi quantities computed on the sub-datum generated by J, sharing the
// ambient lattice. Finite parts convert between the two W_0 tables by their
// action matrices.
class LeviView {
 public:
  LeviView(const BasedRootDatum& parent, std::vector<int> J);

  const std::vector<int>& J() const { return J_; }
  const BasedRootDatum& levi_datum() const { return levi_rd_; }
  const AffineWeyl& levi_weyl() const { return levi_w_; }
  const AffineWeyl& parent_weyl() const { return parent_w_; }

  int w_J() const { return wJ_; }  // longest element of W_{J,0}, parent index

  bool finite_in_levi(int parent_w0) const;
  int to_levi_w0(int parent_w0) const;
  int to_parent_w0(int levi_w0) const;
  // Element conversions (finite part must lie in W_{J,0}).
  AffWeylElement to_levi(const AffWeylElement& w) const;
  AffWeylElement to_parent(const AffWeylElement& w) const;
  bool element_in_levi(const AffWeylElement& parent_elt) const;

  long long length_J(const AffWeylElement& parent_elt) const;
  bool leq_J(const AffWeylElement& x, const AffWeylElement& w) const;
  // Minimal-length representative of the coset (parent finite) w W_{J,0}.
  int min_coset_rep(int parent_w0) const;
  // d is minimal in d W_{J,0} iff d maps every alpha_j (j in J) to a
  // positive root.
  bool is_min_coset_rep(int d) const;

  // <alpha, v(z)> >= 0 for alpha in Phi^+ \ Phi_J^+.
  bool is_J_positive_translation(const Coweight& z) const;

 private:
  const BasedRootDatum* parent_;
  std::vector<int> J_;
  BasedRootDatum levi_rd_;
  AffineWeyl parent_w_;
  AffineWeyl levi_w_;
  int wJ_;
  std::vector<int> parent_to_levi_, levi_to_parent_;
};

}  // namespace workbench
