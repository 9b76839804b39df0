#pragma once
// Affine Weyl group W_p under the dot action: alcove addresses, the signed
// alcove distance, Bruhat order and poset ideals of p-regular dominant weights.

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <utility>

#include "kzl/rootdata.hpp"

namespace kzl {

// z = t_{p theta} w, acting on rho-shifted weights by x -> w x + p theta
struct AffineElement {
  IVec theta;  // simple-root coordinates
  int w = 0;   // index into RootDatum::weyl_group()
  bool operator==(const AffineElement& o) const { return w == o.w && theta == o.theta; }
  bool operator<(const AffineElement& o) const {
    return w != o.w ? w < o.w : theta < o.theta;
  }
};

struct AlcoveAddress {
  AffineElement z;
  Weight lambda0;             // in the bottom alcove C+
  std::vector<int> word;      // reduced word in s_0..s_{n-1} (finite) and s_n (affine)
};

struct PosetIdeal {
  std::string type;
  int p = 0;
  Order order = Order::dominance;
  std::vector<Weight> elements;  // sorted
};

struct IdealReport {
  bool stable = false;
  int a = 0;
  bool inside_jantzen = false;
  bool prime_bound_ok = false;
};

class Alcove {
 public:
  Alcove(RootDatum R, int p);

  const RootDatum& root_datum() const { return R_; }
  int p() const { return p_; }

  bool is_regular(const Weight& l) const;
  std::pair<Weight, Weight> restricted_decompose(const Weight& g) const;
  AlcoveAddress address(const Weight& tau) const;
  int length(const Weight& tau) const;
  int length_oracle(const Weight& tau) const;
  bool parity_check(const Weight& tau, const IVec& theta) const;
  bool jantzen_contains(const Weight& l) const;

  // affine group helpers
  AffineElement identity() const;
  AffineElement generator(int i) const;  // i == rank() is the affine reflection
  AffineElement compose(const AffineElement& a, const AffineElement& b) const;
  Weight dot(const AffineElement& z, const Weight& l) const;
  int coxeter_length(const AffineElement& z) const;
  std::vector<int> reduced_word(const AffineElement& z) const;
  bool bruhat_leq_elements(const AffineElement& u, const AffineElement& v) const;
  // weights in the same orbit compare through their alcove addresses
  bool bruhat_leq(const Weight& mu, const Weight& gamma) const;
  bool leq(const Weight& mu, const Weight& gamma, Order o) const;

  PosetIdeal generate_ideal(const std::vector<Weight>& gens, Order o) const;
  // throws if not a valid ideal
  void validate(const PosetIdeal& I) const;
  IdealReport report(const PosetIdeal& I) const;
  std::vector<Weight> coset_reps(const Weight& omega) const;

 private:
  // x -> z(x) on h-scaled rho-shifted coordinates
  Weight apply_scaled(const AffineElement& z, const Weight& xs) const;
  std::vector<int> walk_to_bottom(Weight& xs, long long scale, AffineElement& z) const;
  std::vector<Weight> below(const Weight& gamma, Order o) const;

  RootDatum R_;
  int p_;
  int s0_w_ = 0;  // Weyl index of the reflection in the highest short root
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<AffineElement, AffineElement>, bool> memo_;
};

}  // namespace kzl
