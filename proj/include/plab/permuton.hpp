#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plab/fraction.hpp"
#include "plab/word.hpp"

namespace plab {

// Measures on the unit square built from three primitive components, each
// carrying uniform mass:
//   Increasing  - segment from (x1,y1) to (x2,y2), x1 < x2, y1 < y2;
//   Decreasing  - segment from (x1,y1) to (x2,y2), x1 < x2, y1 > y2;
//   Block       - axis-aligned rectangle with corners (x1,y1), (x2,y2).
// A spec with total mass 1 whose induced marginal densities are identically 1
// is a permuton; restriction produces sub-measure specs of smaller mass.
enum class ComponentKind { Increasing, Decreasing, Block };

struct Component {
  ComponentKind kind = ComponentKind::Increasing;
  Frac x1, y1, x2, y2;
  Frac mass;

  Frac xlo() const { return x1; }
  Frac xhi() const { return x2; }
  Frac ylo() const { return kind == ComponentKind::Decreasing ? y2 : y1; }
  Frac yhi() const { return kind == ComponentKind::Decreasing ? y1 : y2; }

  void check() const {
    if (!(mass > Frac(0))) throw std::invalid_argument("component mass must be positive");
    if (!(x1 < x2)) throw std::invalid_argument("component needs x1 < x2");
    switch (kind) {
      case ComponentKind::Increasing:
        if (!(y1 < y2)) throw std::invalid_argument("increasing segment needs y1 < y2");
        break;
      case ComponentKind::Decreasing:
        if (!(y1 > y2)) throw std::invalid_argument("decreasing segment needs y1 > y2");
        break;
      case ComponentKind::Block:
        if (!(y1 < y2)) throw std::invalid_argument("block needs y1 < y2");
        break;
    }
    for (const Frac* c : {&x1, &x2, &y1, &y2})
      if (*c < Frac(0) || *c > Frac(1))
        throw std::invalid_argument("component coordinates must lie in [0,1]");
  }
};

struct PermutonSpec {
  std::vector<Component> components;
  std::string name;

  Frac total_mass() const {
    Frac t(0);
    for (const auto& c : components) t += c.mass;
    return t;
  }
  bool empty() const { return components.empty(); }
};

struct ValidationResult {
  bool ok = true;
  std::string message = "ok";
};

// Both marginals of every component are uniform on its coordinate range, so
// the induced marginal densities are piecewise constant; the spec is a
// permuton iff they equal 1 on every piece and the total mass is 1.
inline ValidationResult validate_marginals(const PermutonSpec& spec, double tol = 1e-9) {
  try {
    for (const auto& c : spec.components) c.check();
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
  if (spec.components.empty()) return {false, "empty spec"};
  const Frac total = spec.total_mass();
  if (abs(total - Frac(1)).to_double() > tol)
    return {false, "total mass is " + total.str() + ", expected 1"};

  for (int axis = 0; axis < 2; ++axis) {
    std::vector<Frac> cuts{Frac(0), Frac(1)};
    for (const auto& c : spec.components) {
      cuts.push_back(axis == 0 ? c.xlo() : c.ylo());
      cuts.push_back(axis == 0 ? c.xhi() : c.yhi());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      // density on the open interval (cuts[s], cuts[s+1])
      Frac density(0);
      for (const auto& c : spec.components) {
        const Frac lo = axis == 0 ? c.xlo() : c.ylo();
        const Frac hi = axis == 0 ? c.xhi() : c.yhi();
        if (lo <= cuts[s] && cuts[s + 1] <= hi) density += c.mass / (hi - lo);
      }
      if (abs(density - Frac(1)).to_double() > tol) {
        const Frac mid = (cuts[s] + cuts[s + 1]) / Frac(2);
        return {false, std::string(axis == 0 ? "x" : "y") + "-marginal density is " +
                           density.str() + " near " + mid.str()};
      }
    }
  }
  return {true, "ok"};
}

// True for any probability spec with well-formed components; such a measure
// has atomless marginals even when they are not uniform.
inline ValidationResult validate_pre_permuton(const PermutonSpec& spec, double tol = 1e-9) {
  try {
    for (const auto& c : spec.components) c.check();
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
  if (spec.components.empty()) return {false, "empty spec"};
  if (abs(spec.total_mass() - Frac(1)).to_double() > tol) return {false, "total mass must be 1"};
  return {true, "ok"};
}

// Restriction to [0,x] x [0,y]; masses shrink proportionally to the clipped
// parameter range (segments) or area (blocks). Not renormalized.
inline PermutonSpec restrict_spec(const PermutonSpec& spec, const Frac& x, const Frac& y) {
  if (x < Frac(0) || x > Frac(1) || y < Frac(0) || y > Frac(1))
    throw std::invalid_argument("restrict: corner outside unit square");
  PermutonSpec out;
  out.name = spec.name.empty() ? "" : spec.name + "|restricted";
  for (const auto& c : spec.components) {
    if (c.kind == ComponentKind::Block) {
      const Frac nx2 = min(c.x2, x), ny2 = min(c.y2, y);
      if (nx2 <= c.x1 || ny2 <= c.y1) continue;
      Component clipped = c;
      clipped.x2 = nx2;
      clipped.y2 = ny2;
      clipped.mass = c.mass * ((nx2 - c.x1) * (ny2 - c.y1)) / ((c.x2 - c.x1) * (c.y2 - c.y1));
      out.components.push_back(clipped);
      continue;
    }
    // Segment parametrized by t in [0,1] from (x1,y1) to (x2,y2).
    Frac tlo(0), thi(1);
    {
      // x(t) <= x
      if (x < c.x1)
        thi = Frac(0);
      else if (x < c.x2)
        thi = min(thi, (x - c.x1) / (c.x2 - c.x1));
    }
    if (c.kind == ComponentKind::Increasing) {
      if (y < c.y1)
        thi = Frac(0);
      else if (y < c.y2)
        thi = min(thi, (y - c.y1) / (c.y2 - c.y1));
    } else {
      // y decreases along t: y(t) <= y constrains t from below
      if (y < c.y2)
        tlo = Frac(1);
      else if (y < c.y1)
        tlo = max(tlo, (c.y1 - y) / (c.y1 - c.y2));
    }
    if (!(tlo < thi)) continue;
    Component clipped = c;
    clipped.x1 = c.x1 + tlo * (c.x2 - c.x1);
    clipped.x2 = c.x1 + thi * (c.x2 - c.x1);
    clipped.y1 = c.y1 + tlo * (c.y2 - c.y1);
    clipped.y2 = c.y1 + thi * (c.y2 - c.y1);
    clipped.mass = c.mass * (thi - tlo);
    out.components.push_back(clipped);
  }
  return out;
}

// x -> 1-x; exchanges increasing and decreasing subsets, so LIS-type
// functionals of the mirror equal LDS-type functionals of the original.
inline PermutonSpec mirror(const PermutonSpec& spec) {
  PermutonSpec out;
  out.name = spec.name.empty() ? "" : spec.name + "|mirror";
  for (const auto& c : spec.components) {
    Component m = c;
    m.x1 = Frac(1) - c.x2;
    m.x2 = Frac(1) - c.x1;
    switch (c.kind) {
      case ComponentKind::Increasing:
        m.kind = ComponentKind::Decreasing;
        m.y1 = c.y2;
        m.y2 = c.y1;
        break;
      case ComponentKind::Decreasing:
        m.kind = ComponentKind::Increasing;
        m.y1 = c.y2;
        m.y2 = c.y1;
        break;
      case ComponentKind::Block:
        break;
    }
    out.components.push_back(m);
  }
  std::reverse(out.components.begin(), out.components.end());
  return out;
}

struct Decomposition {
  PermutonSpec incr;
  PermutonSpec decr;
  PermutonSpec sub;
};

// On this component class the maximal-increasing / maximal-decreasing /
// residual split is exactly the split by component kind: monotone closed sets
// carry no planar Lebesgue mass, so blocks contribute to neither side.
inline Decomposition decompose(const PermutonSpec& spec) {
  Decomposition d;
  d.incr.name = spec.name.empty() ? "" : spec.name + "|incr";
  d.decr.name = spec.name.empty() ? "" : spec.name + "|decr";
  d.sub.name = spec.name.empty() ? "" : spec.name + "|sub";
  for (const auto& c : spec.components) {
    switch (c.kind) {
      case ComponentKind::Increasing:
        d.incr.components.push_back(c);
        break;
      case ComponentKind::Decreasing:
        d.decr.components.push_back(c);
        break;
      case ComponentKind::Block:
        d.sub.components.push_back(c);
        break;
    }
  }
  return d;
}

// Piecewise-linear CDF of one marginal of a spec (mass below t on the axis).
class MarginalCdf {
 public:
  MarginalCdf(const PermutonSpec& spec, int axis) {
    cuts_.push_back(Frac(0));
    cuts_.push_back(Frac(1));
    for (const auto& c : spec.components) {
      cuts_.push_back(axis == 0 ? c.xlo() : c.ylo());
      cuts_.push_back(axis == 0 ? c.xhi() : c.yhi());
    }
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
    density_.assign(cuts_.size() - 1, Frac(0));
    for (const auto& c : spec.components) {
      const Frac lo = axis == 0 ? c.xlo() : c.ylo();
      const Frac hi = axis == 0 ? c.xhi() : c.yhi();
      for (std::size_t s = 0; s + 1 < cuts_.size(); ++s)
        if (lo <= cuts_[s] && cuts_[s + 1] <= hi) density_[s] += c.mass / (hi - lo);
    }
    cdf_.assign(cuts_.size(), Frac(0));
    for (std::size_t s = 0; s + 1 < cuts_.size(); ++s)
      cdf_[s + 1] = cdf_[s] + density_[s] * (cuts_[s + 1] - cuts_[s]);
  }

  Frac operator()(const Frac& t) const {
    std::size_t s = segment(t);
    return cdf_[s] + density_[s] * (t - cuts_[s]);
  }
  const std::vector<Frac>& cuts() const { return cuts_; }

 private:
  std::size_t segment(const Frac& t) const {
    std::size_t s = 0;
    while (s + 2 < cuts_.size() && cuts_[s + 1] <= t) ++s;
    return s;
  }

  std::vector<Frac> cuts_;
  std::vector<Frac> density_;
  std::vector<Frac> cdf_;
};

// Pushes a pre-permuton forward through its marginal CDFs, yielding a
// permuton that samples the same permutations. Components are split at CDF
// breakpoints so every image piece is again a straight segment or block.
inline PermutonSpec rescale_to_permuton(const PermutonSpec& spec) {
  const MarginalCdf fx(spec, 0), fy(spec, 1);
  PermutonSpec out;
  out.name = spec.name.empty() ? "" : spec.name + "|rescaled";
  for (const auto& c : spec.components) {
    // collect parameter cuts where the component crosses a CDF breakpoint
    std::vector<Frac> ts{Frac(0), Frac(1)};
    for (const Frac& cut : fx.cuts())
      if (c.x1 < cut && cut < c.x2) ts.push_back((cut - c.x1) / (c.x2 - c.x1));
    if (c.kind != ComponentKind::Block) {
      for (const Frac& cut : fy.cuts()) {
        const Frac lo = min(c.y1, c.y2), hi = max(c.y1, c.y2);
        if (lo < cut && cut < hi) ts.push_back((cut - c.y1) / (c.y2 - c.y1));
      }
      std::sort(ts.begin(), ts.end());
      ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
      for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
        Component piece = c;
        piece.x1 = c.x1 + ts[s] * (c.x2 - c.x1);
        piece.x2 = c.x1 + ts[s + 1] * (c.x2 - c.x1);
        piece.y1 = c.y1 + ts[s] * (c.y2 - c.y1);
        piece.y2 = c.y1 + ts[s + 1] * (c.y2 - c.y1);
        piece.mass = c.mass * (ts[s + 1] - ts[s]);
        piece.x1 = fx(piece.x1);
        piece.x2 = fx(piece.x2);
        piece.y1 = fy(piece.y1);
        piece.y2 = fy(piece.y2);
        if (piece.x1 < piece.x2 && piece.y1 != piece.y2) out.components.push_back(piece);
      }
    } else {
      std::vector<Frac> xs{c.x1, c.x2}, ys{c.y1, c.y2};
      for (const Frac& cut : fx.cuts())
        if (c.x1 < cut && cut < c.x2) xs.push_back(cut);
      for (const Frac& cut : fy.cuts())
        if (c.y1 < cut && cut < c.y2) ys.push_back(cut);
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      std::sort(ys.begin(), ys.end());
      ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
      const Frac area = (c.x2 - c.x1) * (c.y2 - c.y1);
      for (std::size_t a = 0; a + 1 < xs.size(); ++a) {
        for (std::size_t b = 0; b + 1 < ys.size(); ++b) {
          Component piece = c;
          piece.mass = c.mass * ((xs[a + 1] - xs[a]) * (ys[b + 1] - ys[b])) / area;
          piece.x1 = fx(xs[a]);
          piece.x2 = fx(xs[a + 1]);
          piece.y1 = fy(ys[b]);
          piece.y2 = fy(ys[b + 1]);
          if (piece.x1 < piece.x2 && piece.y1 < piece.y2) out.components.push_back(piece);
        }
      }
    }
  }
  return out;
}

// JSON schema: {"components":[{"type":"incr"|"decr"|"block",
//                              "box":[x1,y1,x2,y2],"mass":m}]}
// Numeric values are rationalized on input so decimal literals round-trip as
// exact fractions.
inline nlohmann::ordered_json spec_to_json(const PermutonSpec& spec) {
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : spec.components) {
    const char* type = c.kind == ComponentKind::Increasing   ? "incr"
                       : c.kind == ComponentKind::Decreasing ? "decr"
                                                             : "block";
    comps.push_back({{"type", type},
                     {"box", {c.x1.to_double(), c.y1.to_double(), c.x2.to_double(),
                              c.y2.to_double()}},
                     {"mass", c.mass.to_double()}});
  }
  nlohmann::ordered_json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  j["components"] = std::move(comps);
  return j;
}

inline PermutonSpec spec_from_json(const nlohmann::json& j) {
  PermutonSpec spec;
  if (j.contains("name")) spec.name = j.at("name").get<std::string>();
  if (!j.contains("components")) throw std::invalid_argument("spec json: missing components");
  for (const auto& cj : j.at("components")) {
    Component c;
    const std::string type = cj.at("type").get<std::string>();
    if (type == "incr")
      c.kind = ComponentKind::Increasing;
    else if (type == "decr")
      c.kind = ComponentKind::Decreasing;
    else if (type == "block")
      c.kind = ComponentKind::Block;
    else
      throw std::invalid_argument("spec json: unknown component type '" + type + "'");
    const auto& box = cj.at("box");
    if (!box.is_array() || box.size() != 4)
      throw std::invalid_argument("spec json: box must have 4 entries");
    c.x1 = Frac::from_double(box[0].get<double>());
    c.y1 = Frac::from_double(box[1].get<double>());
    c.x2 = Frac::from_double(box[2].get<double>());
    c.y2 = Frac::from_double(box[3].get<double>());
    c.mass = Frac::from_double(cj.at("mass").get<double>());
    c.check();
    spec.components.push_back(c);
  }
  return spec;
}

}  // namespace plab
