// Stored two-sided twist relations, relator families, and substitutions.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relator/config.hpp"
#include "relator/word.hpp"

namespace relator {

class relation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class RelationKind {
  braid,
  commutation,
  lantern,
  chain_odd,
  chain_even,
  star,
  gsr,
  degenerate_specialization,
};

std::string to_string(RelationKind k);
RelationKind relation_kind_from_string(const std::string& s);

// A two-sided identity lhs = rhs between positive twist words, over a
// configuration that carries every curve either side mentions.
struct Relation {
  std::string name;
  RelationKind kind = RelationKind::chain_even;
  ConfigPtr cfg;
  std::vector<Letter> lhs;
  std::vector<Letter> rhs;
  std::optional<std::pair<int64_t, int64_t>> deltas;  // (de, dsigma) when published
  std::string note;
};

// Named relation instances.
//   star          (t_a0 t_a1 t_a2 t_a3)^3 = t_c1 t_c2 t_c3 on a capped torus
//   star_torus    (t_a t_a t_b t_a)^3 = three nullhomotopic twists, genus 1 chain
//   star_g2       (t_b1 t_b1 t_b2 t_b3)^3 = t_b5 t_u1 t_b5, genus 2 chain
//   gsr           (t_a0 ... t_a{2g+1})^{2g+1} = t_c1 t_c2^g t_c3, param = g
//   lantern       t_l1 t_l2 t_l3 t_l4 = t_x t_y t_z on a capped genus 2 surface
//   chain_even    (t_c1 ... t_cm)^{2m+2} = t_s, param = m, minimal genus m/2
//   chain_odd     (t_c1 ... t_cm)^{m+1} = t_d1 t_d2, param = m, minimal genus
Relation builtin(const std::string& name, int param = 0);

// Chain relation over standard_chain_config(g) with an explicit placement:
// "front" uses c1..cm, "back" uses the last m chain curves.
Relation builtin_chain(int m, int g, const std::string& placement);

// Relator families over the standard chain curves (GSR_capped runs over the
// gsr configuration): A, B, C, D, GSR_capped, torus_elliptic. n multiplies
// the exponent.
Word family(const std::string& name, int g, int n);

std::vector<std::string> family_names();

struct MatchSite {
  size_t index = 0;
  bool lhs_side = true;  // false: the relation's rhs occurs here
};

// All contiguous letter-for-letter occurrences of rel.lhs and rel.rhs.
// Empty when the configurations are incompatible.
std::vector<MatchSite> match_sites(const Word& w, const Relation& rel);

// Replace the contiguous occurrence of one side at `at` with the other side,
// over the merged configuration. forward replaces lhs by rhs.
Word substitute(const Word& w, const Relation& rel, size_t at, bool forward);

// lhs and rhs have the same image in the symplectic representation.
bool relation_homology_consistent(const Relation& rel);

// Reference to a builtin relation instance, serializable in logs/scripts.
struct RelationRef {
  std::string name;       // builtin name
  int m = 0;              // chain length (chains only)
  int g = 0;              // genus (gsr and chains)
  std::string placement;  // chains only
};

Relation resolve_relation(const RelationRef& ref);

// The shipped relation set as a versioned JSON document (text form).
std::string library_json();

}  // namespace relator
