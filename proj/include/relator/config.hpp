// Surfaces, named curve systems, intersection tables, homology classes.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace relator {

class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class SepType { nonseparating, separating, nullhomotopic, boundary_parallel };

std::string to_string(SepType t);
SepType sep_type_from_string(const std::string& s);

struct Surface {
  int genus = 1;
  int boundary = 0;
};

struct NamedCurve {
  std::string id;
  SepType sep = SepType::nonseparating;
  int h = 0;                    // genus split of a separating curve, 1 <= h <= g/2
  std::vector<int64_t> cls;     // homology class of length 2g, basis x1..xg y1..yg
};

// Immutable after construction in practice; words hold it via shared_ptr.
class CurveConfig {
public:
  Surface surface;
  std::string name;

  void add_curve(NamedCurve c);
  void add_alias(const std::string& alias, const std::string& id);
  void set_count(const std::string& u, const std::string& v, int n);

  bool has(const std::string& id) const;
  // Alias-aware id resolution; returns empty string when unknown.
  std::string resolve(const std::string& id) const;
  const NamedCurve& curve(const std::string& id) const;
  const std::vector<NamedCurve>& curves() const { return curves_; }

  // Geometric intersection count of two named curves (0 when unrecorded).
  int count(const std::string& u, const std::string& v) const;
  // Pairing of homology classes under the standard symplectic form.
  int64_t algebraic(const std::string& u, const std::string& v) const;

  // Invariant violations; empty means valid.
  std::vector<std::string> violations() const;

  // Shared ids must carry identical data (class, sep type, counts on shared pairs).
  bool compatible_with(const CurveConfig& other, std::string* why = nullptr) const;

  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  const std::map<std::pair<std::string, std::string>, int>& counts() const {
    return counts_;
  }

private:
  std::vector<NamedCurve> curves_;
  std::map<std::string, size_t> index_;
  std::map<std::string, std::string> aliases_;
  std::map<std::pair<std::string, std::string>, int> counts_;
};

using ConfigPtr = std::shared_ptr<const CurveConfig>;

// Symplectic pairing <u, v> of two class vectors of length 2g.
int64_t symplectic_pairing(const std::vector<int64_t>& u, const std::vector<int64_t>& v);

// Closed genus-g surface with the chain c1..c_{2g+1}: c_{2i} -> x_i and
// c_{2i-1} -> y_i - y_{i-1} (y_0 = y_{g+1} = 0). Aliases a -> c1, b -> c2,
// bi -> ci.
CurveConfig standard_chain_config(int g);
ConfigPtr standard_chain_config_ptr(int g);

// Genus-2 configuration of the degenerate star: chain curves b1, b2, b3 plus
// b5, and one nullhomotopic curve c2 (the middle boundary curve, which bounds
// a disk in this specialization). The two outer boundary curves both become b5.
CurveConfig degenerate_star_config_genus2();

// Boundary curve of a regular neighborhood of an even sub-chain of
// standard_chain_config(g). placement "front" uses c1..c_{chain_len}, "back"
// uses the last chain_len chain curves. Separating of type
// h = min(chain_len/2, g - chain_len/2); nullhomotopic when chain_len = 2g.
NamedCurve separating_chain_boundary(int g, int chain_len, const std::string& placement);

// Union of two compatible configurations. Keeps base's name; curves and
// counts only present in extra are added. Throws on conflicting data.
CurveConfig merge_config(const CurveConfig& base, const CurveConfig& extra);

}  // namespace relator
