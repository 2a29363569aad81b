#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace workbench {

using Vec = std::vector<long long>;

// Exact integer pairing <chi, x> between a character vector (X^* coordinates)
// and a cocharacter vector (X_* coordinates).
long long pairing(const Vec& chi, const Vec& x);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(long long c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Cocharacter-lattice element stored in nu-coordinates (nu = -v).
struct Coweight {
  Vec nu;
  bool operator==(const Coweight&) const = default;
  auto operator<=>(const Coweight&) const = default;
  Vec v() const { return vec_neg(nu); }
  static Coweight from_v(const Vec& v) { return Coweight{vec_neg(v)}; }
};

struct RootPair {
  Vec root;    // X^* coordinates
  Vec coroot;  // X_* coordinates
  int height;  // sum of simple-root coefficients
};

// The finite Weyl group W_0 as an explicit table: elements are indexed by
// discovery order of a shortlex BFS, so index 0 is the identity and the
// stored word of each element is its lexicographically least reduced word.
class FiniteWeylGroup {
 public:
  FiniteWeylGroup() = default;
  void build(int rank, const std::vector<Vec>& simple_roots,
             const std::vector<Vec>& simple_coroots);

  int size() const { return static_cast<int>(words_.size()); }
  int num_gens() const { return num_gens_; }
  int identity() const { return 0; }
  int gen(int j) const { return gen_index_[j]; }
  int mult(int a, int b) const { return mult_table_[a * size() + b]; }
  int inverse(int a) const { return inv_[a]; }
  int length(int a) const { return static_cast<int>(words_[a].size()); }
  const std::vector<int>& word(int a) const { return words_[a]; }

  // Action on X_* (column vectors) and X^* (root vectors).
  Vec act_costar(int a, const Vec& x) const;
  Vec act_star(int a, const Vec& chi) const;

  // Index of the element acting as x -> x - <beta,x> beta^vee, or -1.
  int reflection_index(const Vec& beta, const Vec& beta_covee) const;
  // Element index -> positive-root index if the element is a reflection.
  int reflection_root(int a) const;

  int longest_element() const { return longest_; }
  // Subgroup generated by the listed simple generators.
  std::vector<int> parabolic_elements(const std::vector<int>& J) const;
  int longest_element(const std::vector<int>& J) const;

  int element_with_matrix(const Vec& flat_costar) const;
  Vec costar_matrix(int a) const { return mats_costar_[a]; }

  void set_reflection_roots(const std::vector<RootPair>& positives);

 private:
  int rank_ = 0;
  int num_gens_ = 0;
  int longest_ = 0;
  std::vector<int> gen_index_;
  std::vector<std::vector<int>> words_;
  std::vector<Vec> mats_costar_;  // rank x rank, row-major; x -> M x
  std::vector<Vec> mats_star_;    // action on X^*
  std::vector<int> mult_table_;
  std::vector<int> inv_;
  std::vector<int> refl_root_;
  std::map<Vec, int> index_of_;
};

// Based root datum of a split group: simple roots/coroots inside a pair of
// dual rank-d lattices, the derived positive system, and the residue-field
// cardinality q = p^f.
class BasedRootDatum {
 public:
  BasedRootDatum(std::string name, int rank, std::vector<Vec> simple_roots,
                 std::vector<Vec> simple_coroots, long long p, long long f);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  const Vec& simple_root(int i) const { return simple_roots_[i]; }
  const Vec& simple_coroot(int i) const { return simple_coroots_[i]; }
  long long p() const { return p_; }
  long long f() const { return f_; }
  long long q() const { return q_; }

  const std::vector<RootPair>& positive_roots() const { return positives_; }
  const FiniteWeylGroup& w0() const { return w0_; }

  long long cartan(int i, int j) const;  // <alpha_i, alpha_j^vee>

  bool is_dominant(const Coweight& cw) const;  // <alpha, nu> <= 0 for simple
  // nu1 - nu2 = sum of nonnegative integer multiples of simple coroots.
  bool preceq(const Coweight& x1, const Coweight& x2) const;
  // Unique rational solution of v = sum c_i alpha_i^vee, if any.
  std::optional<std::vector<std::pair<long long, long long>>> coroot_coords_q(
      const Vec& v) const;
  // Integer solution with all coefficients >= 0, if any.
  std::optional<std::vector<long long>> coroot_coords_nat(const Vec& v) const;
  std::optional<std::vector<long long>> coroot_coords_int(const Vec& v) const;

  // Translation element with nu = alpha^vee.
  Coweight lambda_alpha(int alpha) const;

  // J-span element y with <alpha, v(y)> >= max(0, 2 n(alpha) - <alpha, v(z)>)
  // for alpha in J; the returned y makes y z prod lambda_alpha^m dominant
  // relative to J throughout the m-box (and globally when J is all of Delta).
  Coweight dominating_shift(const Coweight& z, const std::vector<int>& J,
                            const std::vector<long long>& n) const;
  bool dominating_shift_box_check(const Coweight& y, const Coweight& z,
                                  const std::vector<int>& J,
                                  const std::vector<long long>& n) const;

  BasedRootDatum levi_subdatum(const std::vector<int>& J) const;

  // Irreducible components of the Dynkin diagram, and the highest root of
  // each (as an index into positive_roots()).
  const std::vector<std::vector<int>>& components() const { return components_; }
  const std::vector<int>& highest_roots() const { return highest_roots_; }

  const Vec& two_rho_covee() const { return two_rho_covee_; }  // sum of pos coroots
  long long sum_pos_pairing(const Vec& nu_abs) const;          // <2 rho, .>

  bool is_gl_preset() const;  // roots e_i - e_{i+1} on the full Z^n lattice

  // Validation used by `datum validate`: throws on violation.
  void validate() const;

 private:
  void close_positive_roots();
  void find_components();

  std::string name_;
  int rank_;
  std::vector<Vec> simple_roots_;
  std::vector<Vec> simple_coroots_;
  long long p_, f_, q_;
  std::vector<RootPair> positives_;
  std::vector<std::vector<int>> components_;
  std::vector<int> highest_roots_;
  Vec two_rho_covee_;
  FiniteWeylGroup w0_;
};

}  // namespace workbench
