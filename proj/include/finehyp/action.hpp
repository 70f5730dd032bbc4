#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>

#include "finehyp/group.hpp"
#include "finehyp/measure.hpp"

namespace finehyp {

/// Finitely supported probability measure on group elements, exact weights,
/// entries sorted by the structural GroupElement order.
class GroupMeasure {
public:
  GroupMeasure() = default;
  static GroupMeasure from_entries(std::vector<std::pair<GroupElement, Rational>> entries);
  static GroupMeasure point_mass(GroupElement g);
  static GroupMeasure uniform(const std::vector<GroupElement>& support);

  const std::vector<std::pair<GroupElement, Rational>>& entries() const { return entries_; }
  size_t support_size() const { return entries_.size(); }
  Rational at(const GroupElement& g) const;

  bool operator==(const GroupMeasure& o) const { return entries_ == o.entries_; }
  std::string str() const;  // "word:num/den ..." in entry order

private:
  std::vector<std::pair<GroupElement, Rational>> entries_;
};

Rational l1_distance(const GroupMeasure& a, const GroupMeasure& b);

/// Left action on measures: (s*m)(t) = m(s^-1 t), i.e. keys become s*t.
GroupMeasure left_translate(const FreeProduct& g, const GroupElement& s, const GroupMeasure& m);

/// Finite auxiliary space with a permutation action of the group, given per
/// generator letter. Empty gen_perms = trivial action (any size).
struct YSpace {
  int size = 1;
  std::map<char, std::vector<int>> gen_perms;

  static YSpace singleton() { return {}; }
  /// Checks sizes, bijectivity, and perm^order(letter) = identity.
  void validate(const FreeProduct& g) const;
  int apply(const FreeProduct& g, const GroupElement& s, int y) const;
};

/// Group action on a graph truncation: act is partial (vertices whose image
/// falls outside the truncation map to nullopt), the fundamental domain meets
/// every orbit once, and a = act(sigma(a), project_v(a)) wherever defined.
class ActionData {
public:
  virtual ~ActionData() = default;
  virtual const Graph& graph() const = 0;
  virtual const FreeProduct& group() const = 0;
  virtual std::optional<VertexId> act(const GroupElement& s, VertexId v) const = 0;
  virtual const std::vector<VertexId>& fundamental_domain() const = 0;
  virtual VertexId project_v(VertexId a) const = 0;
  virtual GroupElement sigma(VertexId a) const = 0;

  /// act() that throws CertificationError instead of returning nullopt.
  VertexId act_checked(const GroupElement& s, VertexId v) const;
};

/// Bass-Serre tree of Z/p * Z/q out to the given tree radius around the
/// <a>-coset base vertex (id 0; the <b>-coset base is id 1). Vertices are
/// cosets w<a> / w<b> identified by canonical representatives (normal forms
/// with no trailing subgroup syllable); numbering is breadth-first. The left
/// multiplication action is computed arithmetically on representatives, so no
/// per-element tables are stored and multi-million-vertex radii stay cheap.
class BassSerreAction final : public ActionData {
public:
  BassSerreAction(int p, int q, int radius);

  const Graph& graph() const override { return graph_; }
  const FreeProduct& group() const override { return group_; }
  std::optional<VertexId> act(const GroupElement& s, VertexId v) const override;
  const std::vector<VertexId>& fundamental_domain() const override { return fd_; }
  VertexId project_v(VertexId a) const override;
  GroupElement sigma(VertexId a) const override;

  int radius() const { return radius_; }
  /// 0 = <a>-type, 1 = <b>-type.
  int type(VertexId v) const;
  /// Depth of v in the tree, measured from base vertex 0.
  int32_t depth(VertexId v) const { return depth_[v]; }

  /// Steals the graph; only valid on an expiring action.
  Graph take_graph() && { return std::move(graph_); }

private:
  GroupElement word(VertexId v) const;
  std::optional<VertexId> lookup(const GroupElement& rep, int type) const;

  FreeProduct group_;
  int radius_;
  Graph graph_;
  std::vector<VertexId> fd_;
  std::vector<char> type_;
  std::vector<VertexId> parent_;  // -1 for the two base vertices
  std::vector<Syllable> step_;    // syllable appended to parent's rep
  std::vector<int32_t> depth_;
};

/// Action backed by explicit tables, as loaded from the action file format.
/// Holds a reference to the graph; the caller keeps it alive.
class TabulatedAction final : public ActionData {
public:
  TabulatedAction(const Graph& g, FreeProduct group, std::vector<VertexId> fd,
                  std::vector<VertexId> project, std::vector<GroupElement> sigma,
                  std::map<char, std::vector<VertexId>> letter_maps);

  const Graph& graph() const override { return g_; }
  const FreeProduct& group() const override { return group_; }
  std::optional<VertexId> act(const GroupElement& s, VertexId v) const override;
  const std::vector<VertexId>& fundamental_domain() const override { return fd_; }
  VertexId project_v(VertexId a) const override;
  GroupElement sigma(VertexId a) const override;

private:
  const Graph& g_;
  FreeProduct group_;
  std::vector<VertexId> fd_;
  std::vector<VertexId> project_;
  std::vector<GroupElement> sigma_;
  std::map<char, std::vector<VertexId>> letter_maps_;  // -1 entries = undefined
};

/// Action file format:
///   finehyp-action v1
///   group zmod-free-product <p> <q>
///   gen a <p>
///   gen b <q>
///   fd <v> <v> ...
///   orbit <vertex> <fd-vertex>
///   sigma <vertex> <word>
///   act <letter> <vertex> <image>
/// Missing act entries mean the image leaves the truncation. The loader
/// validates the ActionData invariants on all defined data (generators act as
/// partial automorphisms compatible with their orders, orbits are invariant,
/// the section is consistent) and reports the first violation with context.
std::unique_ptr<TabulatedAction> load_action(std::istream& in, const Graph& g,
                                             const std::string& source_name = "<stream>");
std::unique_ptr<TabulatedAction> load_action_file(const std::string& path, const Graph& g);
void save_action(const ActionData& ad, std::ostream& out);
void save_action_file(const ActionData& ad, const std::string& path);

/// The Bass-Serre tree alone, for graph-only experiments.
Graph bass_serre_tree(int p, int q, int radius);

/// All group elements of word length <= word_radius fixing vertex a,
/// deterministic order. For the built-in Bass-Serre actions this is the full
/// stabilizer once word_radius >= max(p,q); the caller owns radius adequacy
/// in general.
std::vector<GroupElement> stabilizer(const ActionData& ad, VertexId a, int word_radius);

/// E^v = { sigma(s a)^-1 s sigma(a) : a in F with project_v(a) = v, s in E }.
/// Every member must fix v; a violation signals a broken section and throws
/// InvariantViolation. Throws CertificationError when some s a leaves the
/// truncation.
std::vector<GroupElement> e_v_set(const ActionData& ad, const std::vector<GroupElement>& e,
                                  const std::vector<VertexId>& f, VertexId v);

struct NuFamily {
  std::vector<GroupMeasure> per_y;  // indexed by y
  Rational guarantee;               // certified equivariance deficiency bound
};

/// nu for a finite stabilizer: the uniform measure on the full stabilizer of
/// v (computed with word_radius = max(p,q)), for every y. Group-invariant, so
/// the deficiency guarantee is exactly 0. Ev must lie inside the stabilizer.
NuFamily build_nu(const ActionData& ad, VertexId v, const std::vector<GroupElement>& ev,
                  const Rational& epsilon, const YSpace& y);

/// nu for an infinite-cyclic stabilizer <t>: uniform measure on the Folner
/// interval {t^-N..t^N} with 2N+1 >= 2*max|power|/epsilon, so the shift
/// deficiency 2*|power|/(2N+1) is <= epsilon. Ev members must be powers of t.
NuFamily build_nu_folner(const FreeProduct& g, const GroupElement& t,
                         const std::vector<GroupElement>& ev, const Rational& epsilon,
                         const YSpace& y);

/// mu_{x,y} = sum_a zeta_x(a) * sigma(a) * nu^{project_v(a)}_{sigma(a)^-1 y}.
/// nu_lookup(v, y) must return the measure for fundamental-domain vertex v;
/// it should throw InputError when v is not covered.
GroupMeasure combine_mu(const ActionData& ad, const VertexMeasure& zeta_x,
                        const std::function<const GroupMeasure&(VertexId, int)>& nu_lookup,
                        int y, const YSpace& yspace);

/// max over s in E and (x,y) samples of || s*mu(x,y) - mu(sx, sy) ||_1.
/// x points are caller-side indices; translate_x must return the index of the
/// translated point or throw CertificationError when it leaves the domain.
Rational equivariance_deficiency(const FreeProduct& g, const std::vector<GroupElement>& e,
                                 const std::vector<std::pair<int, int>>& samples,
                                 const std::function<GroupMeasure(int, int)>& mu,
                                 const std::function<int(const GroupElement&, int)>& translate_x,
                                 const YSpace& yspace);

}  // namespace finehyp
