#include "double_description.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace polyef::detail {

namespace {

struct Ray {
  RVector v;
  // zero[k]: the k-th processed inequality is tight on this ray.
  std::vector<bool> zero;
};

bool subset(const std::vector<bool> &a, const std::vector<bool> &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i])
      return false;
  return true;
}

std::vector<bool> meet(const std::vector<bool> &a, const std::vector<bool> &b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] && b[i];
  return out;
}

// Combinatorial adjacency test: p and q span a 2-face iff no third ray is
// tight on every constraint that both are tight on.
bool adjacent(const std::vector<Ray> &rays, std::size_t p, std::size_t q) {
  const std::vector<bool> common = meet(rays[p].zero, rays[q].zero);
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (r == p || r == q)
      continue;
    if (subset(common, rays[r].zero))
      return false;
  }
  return true;
}

class DoubleDescription {
public:
  explicit DoubleDescription(std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i)
      lines_.push_back(unit_vector(dim, i));
  }

  void add(const RVector &a, bool equality) {
    if (!absorb_line(a, equality))
      split_rays(a, equality);
  }

  ConeGenerators result() const {
    ConeGenerators out;
    out.lines = lines_;
    std::set<RVector, decltype(&lex_less)> seen(&lex_less);
    for (const auto &r : rays_)
      if (seen.insert(r.v).second)
        out.rays.push_back(r.v);
    return out;
  }

private:
  // If some line crosses the hyperplane, it leaves the lineality space: the
  // remaining lines and all rays are shifted along it into the hyperplane,
  // and (for an inequality) its feasible half becomes a new extreme ray.
  bool absorb_line(const RVector &a, bool equality) {
    std::size_t idx = 0;
    Rational s0;
    for (; idx < lines_.size(); ++idx) {
      s0 = dot(a, lines_[idx]);
      if (sgn(s0) != 0)
        break;
    }
    if (idx == lines_.size())
      return false;

    RVector l0 = std::move(lines_[idx]);
    lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(idx));
    auto shift = [&](RVector &v) {
      Rational s = dot(a, v);
      if (sgn(s) == 0)
        return;
      Rational f = s / s0;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] -= f * l0[j];
      v = primitive(v);
    };
    for (auto &l : lines_)
      shift(l);
    for (auto &r : rays_) {
      shift(r.v);
      if (!equality)
        r.zero.push_back(true);
    }
    if (!equality) {
      if (sgn(s0) > 0)
        for (auto &e : l0)
          e = -e;
      Ray fresh{primitive(l0), std::vector<bool>(processed_, true)};
      fresh.zero.push_back(false);
      rays_.push_back(std::move(fresh));
      ++processed_;
    }
    return true;
  }

  void split_rays(const RVector &a, bool equality) {
    std::vector<Rational> s(rays_.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      s[i] = dot(a, rays_[i].v);
      if (sgn(s[i]) > 0)
        pos.push_back(i);
      else if (sgn(s[i]) < 0)
        neg.push_back(i);
    }

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      const int sg = sgn(s[i]);
      if (sg == 0 || (sg < 0 && !equality)) {
        Ray r = rays_[i];
        if (!equality)
          r.zero.push_back(sg == 0);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        if (!adjacent(rays_, p, q))
          continue;
        RVector v(a.size());
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = s[p] * rays_[q].v[j] - s[q] * rays_[p].v[j];
        Ray r{primitive(v), meet(rays_[p].zero, rays_[q].zero)};
        if (!equality)
          r.zero.push_back(true);
        next.push_back(std::move(r));
      }
    rays_ = std::move(next);
    if (!equality)
      ++processed_;
  }

  std::vector<RVector> lines_;
  std::vector<Ray> rays_;
  std::size_t processed_ = 0;
};

} // namespace

ConeGenerators dd_cone(std::size_t dim, const std::vector<RVector> &ineqs,
                       const std::vector<RVector> &eqs) {
  DoubleDescription dd(dim);
  for (const auto &e : eqs)
    dd.add(e, true);
  for (const auto &a : ineqs)
    dd.add(a, false);
  return dd.result();
}

} // namespace polyef::detail
