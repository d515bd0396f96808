#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nk/cyc.hpp"

namespace nk {

/// Group elements are normal-form coordinate vectors; the owning group
/// interprets them.
using Elem = std::vector<int>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<Elem> elems;  // sorted in the parent's enumeration order
  std::vector<Elem> gens;   // a generating set (deterministic)

  bool contains(const Elem& e) const;
  size_t order() const { return elems.size(); }
};

/// A character of a subgroup (or of the whole group), stored as a full,
/// multiplicativity-verified value table.
struct Character {
  GroupPtr group;
  std::vector<Elem> domain;  // sorted element list
  std::vector<Cyc> values;   // parallel to domain

  const Cyc& operator()(const Elem& e) const;
  bool defined_on(const Elem& e) const;
  bool is_trivial() const;
  Character times(const Character& o) const;     // common domain required
  Character power(long long k) const;
  Character restrict_to(const Subgroup& h) const;
  bool multiplicative(const FiniteGroup& g) const;

  static Character trivial(GroupPtr g, std::vector<Elem> domain);
};

class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  virtual ~FiniteGroup() = default;

  virtual size_t order() const = 0;
  virtual Elem id() const = 0;
  virtual Elem mul(const Elem& a, const Elem& b) const = 0;
  virtual Elem inv(const Elem& a) const = 0;
  virtual bool is_abelian() const = 0;
  virtual std::string kind() const = 0;
  virtual std::string show(const Elem& e) const;

  /// Canonical enumeration (fixed once per group instance).
  const std::vector<Elem>& elements() const;
  long long index_of(const Elem& e) const;

  Elem pow(const Elem& a, long long k) const;
  Elem conj(const Elem& g, const Elem& h) const;          // h g h^-1
  Elem commutator(const Elem& a, const Elem& b) const;    // a b a^-1 b^-1
  bool is_central(const Elem& a) const;
  long long elem_order(const Elem& a) const;
  long long exponent() const;

  std::vector<Elem> conjugacy_class(const Elem& g) const;
  Subgroup centralizer(const Elem& g) const;
  Subgroup center() const;
  Subgroup whole_group() const;
  Subgroup generated_subgroup(const std::vector<Elem>& gens) const;
  Subgroup commutator_subgroup() const;

  /// All characters of an abelian subgroup, or of the abelianization when
  /// the subgroup is nonabelian. Deterministic order.
  std::vector<Character> characters_of(const Subgroup& h) const;

  /// Exhaustive axiom check (associativity on all |G|^3 triples, identity,
  /// inverses). Throws budget error above the cap.
  void verify_axioms(size_t cap = 64) const;

 protected:
  virtual void enumerate(std::vector<Elem>& out) const = 0;

 private:
  mutable std::vector<Elem> elems_;
  mutable std::map<Elem, long long> index_;
  void ensure_enumerated() const;
};

/// Direct product of cyclic groups Z_{n_1} x ... x Z_{n_k}; elements are
/// exponent vectors.
class AbelianGroup : public FiniteGroup {
 public:
  explicit AbelianGroup(std::vector<long long> factors);

  size_t order() const override;
  Elem id() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool is_abelian() const override { return true; }
  std::string kind() const override { return "abelian"; }
  std::string show(const Elem& e) const override;

  const std::vector<long long>& factors() const { return factors_; }
  Elem gen(size_t i) const;

 protected:
  void enumerate(std::vector<Elem>& out) const override;

 private:
  std::vector<long long> factors_;
};

/// Gamma_{u,v,kappa}: central extension of an abelian base by Z2 x Z2 with
/// x^2 = u, y^2 = v, [x,y] = kappa. Elements are (gamma, i, j), coordinates
/// of gamma followed by i, j in {0,1}, standing for gamma x^i y^j.
class CentralExtGroup : public FiniteGroup {
 public:
  CentralExtGroup(GroupPtr base, Elem u, Elem v, Elem kappa);

  size_t order() const override { return 4 * base_->order(); }
  Elem id() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool is_abelian() const override;
  std::string kind() const override { return "central_ext"; }
  std::string show(const Elem& e) const override;

  GroupPtr base() const { return base_; }
  const Elem& u() const { return u_; }
  const Elem& v() const { return v_; }
  const Elem& kappa_base() const { return kappa_; }

  Elem embed_base(const Elem& g) const;  // gamma -> (gamma,0,0)
  Elem x() const;
  Elem y() const;
  Elem kappa() const { return embed_base(kappa_); }

 protected:
  void enumerate(std::vector<Elem>& out) const override;

 private:
  GroupPtr base_;  // abelian
  Elem u_, v_, kappa_;
  size_t bn_;  // base coordinate length
};

/// Gamma(r-th root of w): abelian extension adjoining t with t^r = w.
/// Elements are (gamma, k), 0 <= k < r.
class RootExtGroup : public FiniteGroup {
 public:
  RootExtGroup(GroupPtr base, Elem w, long long r);

  size_t order() const override { return base_->order() * r_; }
  Elem id() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool is_abelian() const override { return true; }
  std::string kind() const override { return "root_ext"; }
  std::string show(const Elem& e) const override;

  GroupPtr base() const { return base_; }
  const Elem& w() const { return w_; }
  long long r() const { return r_; }

  Elem embed_base(const Elem& g) const;
  Elem t() const;

 protected:
  void enumerate(std::vector<Elem>& out) const override;

 private:
  GroupPtr base_;  // abelian
  Elem w_;
  long long r_;
  size_t bn_;
};

/// Central extension of an abelian base by Z2 = <kappa> given by an
/// exponent-valued 2-cocycle tau extended bimultiplicatively from values on
/// generator pairs. Elements are (gamma, s), s in {0,1}.
class SigmaExtGroup : public FiniteGroup {
 public:
  /// tau_exp[a][b] = exponent of kappa in tau(gen_a, gen_b).
  SigmaExtGroup(std::shared_ptr<const AbelianGroup> base,
                std::vector<std::vector<int>> tau_exp);

  size_t order() const override { return 2 * base_->order(); }
  Elem id() const override;
  Elem mul(const Elem& a, const Elem& b) const override;
  Elem inv(const Elem& a) const override;
  bool is_abelian() const override;
  std::string kind() const override { return "sigma_ext"; }
  std::string show(const Elem& e) const override;

  std::shared_ptr<const AbelianGroup> base() const { return base_; }
  const std::vector<std::vector<int>>& tau_exp() const { return tau_; }

  int tau_of(const Elem& a, const Elem& b) const;  // exponent of kappa
  Elem embed_base(const Elem& g) const;            // the section s
  Elem kappa() const;

 protected:
  void enumerate(std::vector<Elem>& out) const override;

 private:
  std::shared_ptr<const AbelianGroup> base_;
  std::vector<std::vector<int>> tau_;
  size_t bn_;
};

// ---- constructions -------------------------------------------------------

/// Gamma_{u,v,kappa}; requires kappa^2 = e. Axioms are checked exhaustively
/// when |G| <= axiom_cap.
std::shared_ptr<const CentralExtGroup> make_central_ext(GroupPtr gamma, const Elem& u,
                                                        const Elem& v, const Elem& kappa,
                                                        size_t axiom_cap = 64);

std::shared_ptr<const RootExtGroup> make_root_ext(GroupPtr gamma, const Elem& w, long long r);

struct QuotientResult {
  GroupPtr group;
  // projection: element index in the source group -> element of the quotient
  std::vector<Elem> proj;
  Elem project(const FiniteGroup& src, const Elem& e) const { return proj[src.index_of(e)]; }
};

/// G / <z> for a central z. The result is presented in normal form
/// (AbelianGroup or CentralExtGroup), never as a multiplication table.
QuotientResult quotient_by_central(GroupPtr g, const Elem& z);

struct Split2Result {
  std::shared_ptr<const CentralExtGroup> two_part;   // (Gamma_2)_{u2,v2,kappa}
  std::shared_ptr<const AbelianGroup> odd_part;      // Gamma_odd
  // verified isomorphism G -> two_part x odd_part, as element pairs indexed
  // by the source enumeration
  std::vector<std::pair<Elem, Elem>> iso;
};

/// Splits Gamma_{u,v,kappa} as (Gamma_2)_{u2,v2,kappa} x Gamma_odd with the
/// explicit isomorphism  g2 g x^i y^j -> g2 u^{i(m-1)} v^{j(n-1)} x~^i y~^j g.
Split2Result split_2group(const std::shared_ptr<const CentralExtGroup>& g);

/// Abelianization presented as an AbelianGroup together with the projection.
QuotientResult abelianization(GroupPtr g);

/// Characters chi of `h` with chi(e_i) = v_i for the listed constraints;
/// deterministic order.
std::vector<Character> characters_with_values(const FiniteGroup& g, const Subgroup& h,
                                              const std::vector<std::pair<Elem, Cyc>>& constraints);

}  // namespace nk
