#include "workbench/weyl.hpp"

#include <algorithm>
#include <set>

namespace workbench {

AffineWeyl::AffineWeyl(const BasedRootDatum& rd) : rd_(&rd) {
  const auto& w0 = rd.w0();
  // Simple reflections fix the level-0 walls of the base alcove.
  for (int j = 0; j < rd.num_simple(); ++j) {
    int ridx = -1;
    for (size_t r = 0; r < rd.positive_roots().size(); ++r)
      if (rd.positive_roots()[r].root == rd.simple_root(j)) {
        ridx = static_cast<int>(r);
        break;
      }
    saff_.push_back(SAffGen{ridx, 0, AffWeylElement{Vec(rd.rank(), 0), w0.gen(j)}});
  }
  // One affine reflection per irreducible component, fixing the wall
  // {<theta, x> = -1} of the base alcove.
  for (size_t c = 0; c < rd.components().size(); ++c) {
    int hr = rd.highest_roots()[c];
    if (hr < 0) continue;
    const RootPair& theta = rd.positive_roots()[hr];
    int refl = w0.reflection_index(theta.root, theta.coroot);
    saff_.push_back(SAffGen{hr, 1, AffWeylElement{vec_neg(theta.coroot), refl}});
  }
  // Interior point of the base alcove: -(sum of positive coroots)/D with D
  // exceeding every pairing <beta, 2 rho^vee>.
  base_point_ = vec_neg(rd.two_rho_covee());
  base_den_ = 1;
  for (const auto& rp : rd.positive_roots())
    base_den_ = std::max(base_den_, pairing(rp.root, rd.two_rho_covee()) + 1);
  for (const auto& rp : rd.positive_roots()) positive_root_set_.insert(rp.root);
}

AffWeylElement AffineWeyl::identity() const {
  return AffWeylElement{Vec(rd_->rank(), 0), rd_->w0().identity()};
}
AffWeylElement AffineWeyl::translation(const Coweight& cw) const {
  return AffWeylElement{cw.nu, rd_->w0().identity()};
}
AffWeylElement AffineWeyl::finite(int w0) const {
  return AffWeylElement{Vec(rd_->rank(), 0), w0};
}

AffWeylElement AffineWeyl::multiply(const AffWeylElement& a,
                                    const AffWeylElement& b) const {
  const auto& w0 = rd_->w0();
  return AffWeylElement{vec_add(a.nu, w0.act_costar(a.w0, b.nu)),
                        w0.mult(a.w0, b.w0)};
}

AffWeylElement AffineWeyl::inverse(const AffWeylElement& a) const {
  const auto& w0 = rd_->w0();
  int wi = w0.inverse(a.w0);
  return AffWeylElement{vec_neg(w0.act_costar(wi, a.nu)), wi};
}

long long AffineWeyl::length(const AffWeylElement& w) const {
  const auto& w0 = rd_->w0();
  int winv = w0.inverse(w.w0);
  long long len = 0;
  for (const auto& rp : rd_->positive_roots()) {
    Vec pre = w0.act_star(winv, rp.root);
    bool is_pos = positive_root_set_.count(pre) > 0;
    long long pr = pairing(rp.root, w.nu);
    len += is_pos ? std::abs(pr) : std::abs(pr + 1);
  }
  return len;
}

// l(sw) < l(w) iff the wall of s separates the base alcove from w(base),
// i.e. the affine function of s is negative at w(base point).
bool AffineWeyl::is_left_descent(int s, const AffWeylElement& w) const {
  Vec P = apply_to_point(w, base_point_);
  const SAffGen& g = saff_[s];
  const Vec& beta = rd_->positive_roots()[g.root_index].root;
  long long val = pairing(beta, P) + g.level * base_den_;
  // Affine function positive on the base alcove: -beta for level 0, beta+1
  // for the component wall.
  return g.level == 0 ? (val > 0) : (val < 0);
}
bool AffineWeyl::is_right_descent(const AffWeylElement& w, int s) const {
  return is_left_descent(s, inverse(w));
}

AffReducedWord AffineWeyl::reduced_word(const AffWeylElement& w) const {
  AffReducedWord out;
  AffWeylElement cur = w;
  while (true) {
    int found = -1;
    for (int s = 0; s < num_saff(); ++s)
      if (is_left_descent(s, cur)) {
        found = s;
        break;
      }
    if (found < 0) break;
    out.letters.push_back(found);
    cur = multiply(saff_[found].elem, cur);
  }
  out.omega = cur;
  return out;
}

AffWeylElement AffineWeyl::evaluate(const AffReducedWord& word) const {
  AffWeylElement acc = identity();
  for (int s : word.letters) acc = multiply(acc, saff_[s].elem);
  return multiply(acc, word.omega);
}

std::vector<std::vector<int>> AffineWeyl::all_reduced_words(
    const AffWeylElement& w) const {
  auto [waff, u] = omega_decompose(w);
  (void)u;
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  auto rec = [&](auto&& self, const AffWeylElement& cur) -> void {
    bool any = false;
    for (int s = 0; s < num_saff(); ++s)
      if (is_left_descent(s, cur)) {
        any = true;
        stack.push_back(s);
        self(self, multiply(saff_[s].elem, cur));
        stack.pop_back();
      }
    if (!any) out.push_back(stack);
  };
  rec(rec, waff);
  return out;
}

std::pair<AffWeylElement, AffWeylElement> AffineWeyl::omega_decompose(
    const AffWeylElement& w) const {
  AffReducedWord word = reduced_word(w);
  AffWeylElement waff = identity();
  for (int s : word.letters) waff = multiply(waff, saff_[s].elem);
  return {waff, word.omega};
}

AffWeylElement AffineWeyl::omega_part(const AffWeylElement& w) const {
  return omega_decompose(w).second;
}

bool AffineWeyl::in_waff(const AffWeylElement& w) const {
  return rd_->coroot_coords_int(w.nu).has_value();
}

bool AffineWeyl::bruhat_leq(const AffWeylElement& x,
                            const AffWeylElement& w) const {
  auto [xa, xu] = omega_decompose(x);
  auto [wa, wu] = omega_decompose(w);
  if (!(xu == wu)) return false;
  AffWeylElement a = xa, b = wa;
  while (true) {
    int s = -1;
    for (int t = 0; t < num_saff(); ++t)
      if (is_left_descent(t, b)) {
        s = t;
        break;
      }
    if (s < 0) return a == b;  // b is the identity in W^aff
    if (is_left_descent(s, a)) a = multiply(saff_[s].elem, a);
    b = multiply(saff_[s].elem, b);
  }
}

bool AffineWeyl::bruhat_leq_subword_oracle(const AffWeylElement& x,
                                           const AffWeylElement& w) const {
  auto [xa, xu] = omega_decompose(x);
  auto [wa, wu] = omega_decompose(w);
  if (!(xu == wu)) return false;
  auto words = all_reduced_words(wa);
  std::set<AffWeylElement> products;
  for (const auto& word : words) {
    size_t n = word.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      AffWeylElement acc = identity();
      for (size_t i = 0; i < n; ++i)
        if (mask & (size_t{1} << i)) acc = multiply(acc, saff_[word[i]].elem);
      products.insert(acc);
    }
  }
  return products.count(xa) > 0;
}

bool AffineWeyl::bruhat_leq_dominant(const Coweight& l1,
                                     const Coweight& l2) const {
  if (!rd_->is_dominant(l1) || !rd_->is_dominant(l2))
    throw std::invalid_argument("bruhat_leq_dominant: inputs not dominant");
  AffWeylElement t1 = translation(l1), t2 = translation(l2);
  if (!(omega_part(t1) == omega_part(t2)))
    throw std::invalid_argument("bruhat_leq_dominant: different W^aff cosets");
  return rd_->preceq(l1, l2);
}

Coweight AffineWeyl::dominant_dcoset_rep(const AffWeylElement& w) const {
  const auto& w0 = rd_->w0();
  for (int a = 0; a < w0.size(); ++a) {
    Coweight cand{w0.act_costar(a, w.nu)};
    if (rd_->is_dominant(cand)) return cand;
  }
  throw std::runtime_error("no dominant conjugate found");
}

std::vector<AffWeylElement> AffineWeyl::bruhat_interval_below(
    const AffWeylElement& w) const {
  auto [wa, wu] = omega_decompose(w);
  AffReducedWord word = reduced_word(wa);
  size_t n = word.letters.size();
  std::set<AffWeylElement> products;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    AffWeylElement acc = identity();
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i))
        acc = multiply(acc, saff_[word.letters[i]].elem);
    products.insert(acc);
  }
  std::vector<AffWeylElement> out;
  for (const auto& y : products) out.push_back(multiply(y, wu));
  return out;
}

bool AffineWeyl::is_reflection(const AffWeylElement& tau) const {
  int r = rd_->w0().reflection_root(tau.w0);
  if (r < 0) return false;
  const RootPair& rp = rd_->positive_roots()[r];
  // nu must be an integer multiple of beta^vee.
  long long c = 0;
  bool set = false;
  for (int i = 0; i < rd_->rank(); ++i) {
    if (rp.coroot[i] == 0) {
      if (tau.nu[i] != 0) return false;
    } else {
      if (tau.nu[i] % rp.coroot[i] != 0) return false;
      long long ci = tau.nu[i] / rp.coroot[i];
      if (set && ci != c) return false;
      c = ci;
      set = true;
    }
  }
  return true;
}

std::pair<int, long long> AffineWeyl::reflection_data(
    const AffWeylElement& tau) const {
  int r = rd_->w0().reflection_root(tau.w0);
  if (r < 0) throw std::invalid_argument("not a reflection");
  const RootPair& rp = rd_->positive_roots()[r];
  long long c = 0;
  for (int i = 0; i < rd_->rank(); ++i)
    if (rp.coroot[i] != 0) {
      c = tau.nu[i] / rp.coroot[i];
      break;
    }
  if (!(tau.nu == vec_scale(c, rp.coroot)))
    throw std::invalid_argument("not an affine reflection");
  return {r, -c};  // nu = -r beta^vee
}

Vec AffineWeyl::apply_to_point(const AffWeylElement& w, const Vec& X) const {
  Vec y = rd_->w0().act_costar(w.w0, X);
  return vec_add(y, vec_scale(base_den_, w.nu));
}

LeviView::LeviView(const BasedRootDatum& parent, std::vector<int> J)
    : parent_(&parent),
      J_(std::move(J)),
      levi_rd_(parent.levi_subdatum(J_)),
      parent_w_(parent),
      levi_w_(levi_rd_) {
  wJ_ = parent.w0().longest_element(J_);
  const auto& pw = parent.w0();
  const auto& lw = levi_rd_.w0();
  parent_to_levi_.assign(pw.size(), -1);
  levi_to_parent_.assign(lw.size(), -1);
  for (int a = 0; a < lw.size(); ++a) {
    int pidx = pw.element_with_matrix(lw.costar_matrix(a));
    if (pidx < 0) throw std::runtime_error("Levi element missing in parent");
    levi_to_parent_[a] = pidx;
    parent_to_levi_[pidx] = a;
  }
}

bool LeviView::finite_in_levi(int parent_w0) const {
  return parent_to_levi_[parent_w0] >= 0;
}
int LeviView::to_levi_w0(int parent_w0) const {
  int a = parent_to_levi_[parent_w0];
  if (a < 0) throw std::invalid_argument("finite part outside W_{J,0}");
  return a;
}
int LeviView::to_parent_w0(int levi_w0) const { return levi_to_parent_[levi_w0]; }

AffWeylElement LeviView::to_levi(const AffWeylElement& w) const {
  return AffWeylElement{w.nu, to_levi_w0(w.w0)};
}
AffWeylElement LeviView::to_parent(const AffWeylElement& w) const {
  return AffWeylElement{w.nu, to_parent_w0(w.w0)};
}
bool LeviView::element_in_levi(const AffWeylElement& w) const {
  return finite_in_levi(w.w0);
}

long long LeviView::length_J(const AffWeylElement& w) const {
  return levi_w_.length(to_levi(w));
}
bool LeviView::leq_J(const AffWeylElement& x, const AffWeylElement& w) const {
  return levi_w_.bruhat_leq(to_levi(x), to_levi(w));
}

int LeviView::min_coset_rep(int parent_w0) const {
  const auto& pw = parent_->w0();
  int best = -1;
  for (int a : pw.parabolic_elements(J_)) {
    int cand = pw.mult(parent_w0, a);
    if (best < 0 || pw.length(cand) < pw.length(best)) best = cand;
  }
  return best;
}

bool LeviView::is_min_coset_rep(int d) const {
  const auto& pw = parent_->w0();
  for (int j : J_) {
    Vec img = pw.act_star(d, parent_->simple_root(j));
    bool positive = false;
    for (const auto& rp : parent_->positive_roots())
      if (rp.root == img) positive = true;
    if (!positive) return false;
  }
  return true;
}

bool LeviView::is_J_positive_translation(const Coweight& z) const {
  std::set<Vec> levi_pos;
  for (const auto& rp : levi_rd_.positive_roots()) levi_pos.insert(rp.root);
  Vec v = z.v();
  for (const auto& rp : parent_->positive_roots())
    if (!levi_pos.count(rp.root) && pairing(rp.root, v) < 0) return false;
  return true;
}

}  // namespace workbench
