#pragma once
// Finite root systems of rank <= 4.  Weights are integer vectors in
// fundamental-weight coordinates, roots are integer vectors in simple-root
// coordinates.

#include <string>
#include <vector>

namespace kzl {

using IVec = std::vector<int>;
using Weight = IVec;

enum class Order { dominance, cone, bruhat };

Order parse_order(const std::string& s);
std::string order_name(Order o);

struct WeylElement {
  std::vector<int> word;       // canonical reduced word (lex-first)
  std::vector<IVec> matrix;    // action on weight coordinates, row-major
};

class RootDatum {
 public:
  static RootDatum make(const std::string& type);

  const std::string& type() const { return type_; }
  int rank() const { return n_; }
  int coxeter_number() const { return h_; }
  // cartan(i,j) = <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<IVec>& cartan_matrix() const { return cartan_; }
  const std::vector<IVec>& positive_roots() const { return pos_; }
  // positive coroots in simple-coroot coordinates, same order as roots
  const std::vector<IVec>& positive_coroots() const { return copos_; }
  // coroot of the highest short root, simple-coroot coordinates
  const IVec& highest_short_coroot() const { return a0v_; }
  // highest short root, simple-root coordinates
  const IVec& highest_short_root() const { return a0_; }
  Weight rho() const { return Weight(n_, 1); }

  // <lambda, coroot> for a coroot in simple-coroot coordinates
  int pairing(const Weight& lambda, const IVec& coroot) const;
  // simple-root coordinates -> weight coordinates
  Weight root_to_weight(const IVec& beta) const;
  // weight -> simple-root coordinates as fractions num/det
  IVec weight_to_root_num(const Weight& lambda) const;
  int det() const { return det_; }

  bool is_dominant(const Weight& l) const;
  bool leq(const Weight& mu, const Weight& lambda, Order o) const;

  Weight reflect(int i, const Weight& l) const;           // s_i(l)
  Weight act(const std::vector<int>& word, const Weight& l) const;
  Weight dot(const std::vector<int>& word, const Weight& l) const;
  // w(beta) for beta in simple-root coordinates
  IVec act_root(const std::vector<int>& word, const IVec& beta) const;

  const std::vector<WeylElement>& weyl_group() const { return W_; }
  int longest_index() const { return w0_; }
  Weight opposition(const Weight& l) const;  // -w0 l
  // index in weyl_group() of the element with the given action matrix
  int find_element(const std::vector<IVec>& matrix) const;
  std::vector<IVec> compose(const std::vector<IVec>& a, const std::vector<IVec>& b) const;
  Weight apply_matrix(const std::vector<IVec>& m, const Weight& l) const;

 private:
  void finish();

  std::string type_;
  int n_ = 0, h_ = 0, det_ = 1;
  std::vector<IVec> cartan_;
  std::vector<int> sym_;  // d_i = (alpha_i, alpha_i)/2 up to a common scale
  std::vector<IVec> pos_, copos_;
  IVec a0_, a0v_;
  std::vector<IVec> adj_;  // adjugate of the Cartan matrix
  std::vector<WeylElement> W_;
  int w0_ = 0;
};

}  // namespace kzl
