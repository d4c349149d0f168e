#include "relator/config.hpp"

#include <algorithm>
#include <numeric>

namespace relator {

std::string to_string(SepType t) {
  switch (t) {
    case SepType::nonseparating: return "nonseparating";
    case SepType::separating: return "separating";
    case SepType::nullhomotopic: return "nullhomotopic";
    case SepType::boundary_parallel: return "boundary_parallel";
  }
  return "unknown";
}

SepType sep_type_from_string(const std::string& s) {
  if (s == "nonseparating") return SepType::nonseparating;
  if (s == "separating") return SepType::separating;
  if (s == "nullhomotopic") return SepType::nullhomotopic;
  if (s == "boundary_parallel") return SepType::boundary_parallel;
  throw config_error("unknown separation type: " + s);
}

void CurveConfig::add_curve(NamedCurve c) {
  if (index_.count(c.id))
    throw config_error("duplicate curve id: " + c.id);
  if (c.cls.empty())
    c.cls.assign(2 * static_cast<size_t>(surface.genus), 0);
  if (c.cls.size() != 2 * static_cast<size_t>(surface.genus))
    throw config_error("class length mismatch for curve " + c.id);
  index_[c.id] = curves_.size();
  curves_.push_back(std::move(c));
}

void CurveConfig::add_alias(const std::string& alias, const std::string& id) {
  aliases_[alias] = id;
}

void CurveConfig::set_count(const std::string& u, const std::string& v, int n) {
  std::string a = resolve(u), b = resolve(v);
  if (a.empty() || b.empty())
    throw config_error("set_count on unknown curve: " + u + ", " + v);
  if (a == b)
    throw config_error("intersection table diagonal must stay zero: " + a);
  if (a > b) std::swap(a, b);
  counts_[{a, b}] = n;
}

bool CurveConfig::has(const std::string& id) const { return !resolve(id).empty(); }

std::string CurveConfig::resolve(const std::string& id) const {
  if (index_.count(id)) return id;
  auto it = aliases_.find(id);
  if (it != aliases_.end() && index_.count(it->second)) return it->second;
  return "";
}

const NamedCurve& CurveConfig::curve(const std::string& id) const {
  std::string r = resolve(id);
  if (r.empty()) throw config_error("unknown curve id: " + id);
  return curves_[index_.at(r)];
}

int CurveConfig::count(const std::string& u, const std::string& v) const {
  std::string a = resolve(u), b = resolve(v);
  if (a.empty() || b.empty())
    throw config_error("intersection count of unknown curve: " + u + ", " + v);
  if (a == b) return 0;
  if (a > b) std::swap(a, b);
  auto it = counts_.find({a, b});
  return it == counts_.end() ? 0 : it->second;
}

int64_t CurveConfig::algebraic(const std::string& u, const std::string& v) const {
  return symplectic_pairing(curve(u).cls, curve(v).cls);
}

int64_t symplectic_pairing(const std::vector<int64_t>& u, const std::vector<int64_t>& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw config_error("pairing needs two class vectors of equal even length");
  size_t g = u.size() / 2;
  int64_t s = 0;
  for (size_t i = 0; i < g; i++)
    s += u[i] * v[g + i] - u[g + i] * v[i];
  return s;
}

static int64_t vec_gcd(const std::vector<int64_t>& v) {
  int64_t g = 0;
  for (int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

std::vector<std::string> CurveConfig::violations() const {
  std::vector<std::string> out;
  for (const auto& c : curves_) {
    bool zero = vec_gcd(c.cls) == 0;
    switch (c.sep) {
      case SepType::nonseparating:
        if (vec_gcd(c.cls) != 1)
          out.push_back("nonseparating curve " + c.id + " has a non-primitive class");
        break;
      case SepType::separating:
        if (!zero) out.push_back("separating curve " + c.id + " has a nonzero class");
        if (c.h < 1 || 2 * c.h > surface.genus)
          out.push_back("separating curve " + c.id + " has type h out of range");
        break;
      case SepType::nullhomotopic:
        if (!zero) out.push_back("nullhomotopic curve " + c.id + " has a nonzero class");
        break;
      case SepType::boundary_parallel:
        break;
    }
  }
  for (size_t i = 0; i < curves_.size(); i++)
    for (size_t j = i + 1; j < curves_.size(); j++) {
      int64_t alg = symplectic_pairing(curves_[i].cls, curves_[j].cls);
      int geo = count(curves_[i].id, curves_[j].id);
      if (alg < 0) alg = -alg;
      if (alg > geo)
        out.push_back("|algebraic| exceeds geometric count for " + curves_[i].id +
                      ", " + curves_[j].id);
    }
  // Chain pattern for configurations carrying the standard chain ids.
  std::vector<std::string> chain;
  for (int i = 1; has("c" + std::to_string(i)); i++) {
    if (curve("c" + std::to_string(i)).sep != SepType::nonseparating) break;
    chain.push_back("c" + std::to_string(i));
  }
  for (size_t i = 0; i + 1 < chain.size(); i++)
    if (count(chain[i], chain[i + 1]) != 1)
      out.push_back("chain adjacency broken at " + chain[i] + ", " + chain[i + 1]);
  for (size_t i = 0; i < chain.size(); i++)
    for (size_t j = i + 2; j < chain.size(); j++)
      if (count(chain[i], chain[j]) != 0)
        out.push_back("chain curves " + chain[i] + ", " + chain[j] + " should be disjoint");
  return out;
}

bool CurveConfig::compatible_with(const CurveConfig& other, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (surface.genus != other.surface.genus)
    return fail("genus mismatch");
  for (const auto& c : curves_) {
    if (!other.has(c.id)) continue;
    const NamedCurve& o = other.curve(c.id);
    if (c.sep != o.sep || c.h != o.h || c.cls != o.cls)
      return fail("curve data disagrees for shared id " + c.id);
  }
  for (const auto& [key, n] : counts_) {
    if (!other.has(key.first) || !other.has(key.second)) continue;
    if (other.count(key.first, key.second) != n)
      return fail("intersection count disagrees for " + key.first + ", " + key.second);
  }
  return true;
}

CurveConfig standard_chain_config(int g) {
  if (g < 1) throw config_error("genus must be at least 1");
  CurveConfig cfg;
  cfg.surface = {g, 0};
  cfg.name = "chain_g" + std::to_string(g);
  auto cls = [&](int i) {
    std::vector<int64_t> v(2 * static_cast<size_t>(g), 0);
    if (i % 2 == 0) {
      v[static_cast<size_t>(i / 2 - 1)] = 1;  // x_{i/2}
    } else {
      int j = (i + 1) / 2;                    // y_j - y_{j-1}
      if (j <= g) v[static_cast<size_t>(g + j - 1)] = 1;
      if (j - 1 >= 1) v[static_cast<size_t>(g + j - 2)] = -1;
    }
    return v;
  };
  for (int i = 1; i <= 2 * g + 1; i++) {
    NamedCurve c;
    c.id = "c" + std::to_string(i);
    c.sep = SepType::nonseparating;
    c.cls = cls(i);
    cfg.add_curve(std::move(c));
  }
  for (int i = 1; i <= 2 * g; i++)
    cfg.set_count("c" + std::to_string(i), "c" + std::to_string(i + 1), 1);
  cfg.add_alias("a", "c1");
  cfg.add_alias("b", "c2");
  for (int i = 1; i <= 2 * g + 1; i++)
    cfg.add_alias("b" + std::to_string(i), "c" + std::to_string(i));
  return cfg;
}

ConfigPtr standard_chain_config_ptr(int g) {
  return std::make_shared<const CurveConfig>(standard_chain_config(g));
}

CurveConfig degenerate_star_config_genus2() {
  CurveConfig cfg;
  cfg.surface = {2, 0};
  cfg.name = "degenerate_star_g2";
  CurveConfig std2 = standard_chain_config(2);
  auto copy_as = [&](const std::string& from, const std::string& to) {
    NamedCurve c = std2.curve(from);
    c.id = to;
    cfg.add_curve(std::move(c));
  };
  copy_as("c1", "b1");
  copy_as("c2", "b2");
  copy_as("c3", "b3");
  copy_as("c5", "b5");
  NamedCurve disk;
  disk.id = "c2";
  disk.sep = SepType::nullhomotopic;
  cfg.add_curve(std::move(disk));
  cfg.set_count("b1", "b2", 1);
  cfg.set_count("b2", "b3", 1);
  return cfg;
}

CurveConfig merge_config(const CurveConfig& base, const CurveConfig& extra) {
  std::string why;
  if (!base.compatible_with(extra, &why) || !extra.compatible_with(base, &why))
    throw config_error("incompatible configurations: " + why);
  CurveConfig out = base;
  for (const auto& c : extra.curves())
    if (!out.has(c.id)) out.add_curve(c);
  for (const auto& [key, n] : extra.counts())
    out.set_count(key.first, key.second, n);
  for (const auto& [alias, id] : extra.aliases())
    if (out.resolve(alias).empty()) out.add_alias(alias, id);
  return out;
}

NamedCurve separating_chain_boundary(int g, int chain_len, const std::string& placement) {
  if (g < 1) throw config_error("genus must be at least 1");
  if (chain_len < 2 || chain_len % 2 != 0)
    throw config_error("chain length must be even and at least 2");
  if (chain_len > 2 * g)
    throw config_error("chain does not fit on a genus " + std::to_string(g) + " surface");
  int lo, hi;
  if (placement == "front") {
    lo = 1;
    hi = chain_len;
  } else if (placement == "back") {
    hi = 2 * g + 1;
    lo = hi - chain_len + 1;
  } else {
    throw config_error("unknown placement: " + placement);
  }
  NamedCurve c;
  c.id = "s" + std::to_string(lo) + "_" + std::to_string(hi);
  c.cls.assign(2 * static_cast<size_t>(g), 0);
  int h = chain_len / 2;
  if (h == g) {
    c.sep = SepType::nullhomotopic;   // the complement is a disk
    c.h = 0;
  } else {
    c.sep = SepType::separating;
    c.h = std::min(h, g - h);
  }
  return c;
}

}  // namespace relator
