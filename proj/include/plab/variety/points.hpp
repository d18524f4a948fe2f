#pragma once

// Exact enumeration of the common zeros of a polynomial system over a finite
// field. Variables solved linearly are eliminated first, absent variables
// contribute a factor q, and the last remaining variable is root-solved.

#include <functional>
#include <vector>

#include "plab/arith/upoly.hpp"
#include "plab/mpoly/sparse_poly.hpp"

namespace plab::variety {

struct PointCount {
  u64 p = 0;
  unsigned k = 1;
  std::size_t n = 0;
  u64 count = 0;
  u64 budget_used = 0;
};

template <class F>
class PointEnumerator {
 public:
  using Elem = typename F::Elem;
  using Poly = SparsePoly<F>;
  using Visitor = std::function<bool(const std::vector<Elem>&)>;  // return false to stop

  PointEnumerator(const F& f, std::vector<Poly> fs, u64 budget) : f_(f), budget_(budget) {
    if (fs.empty()) throw UsageError("point counting needs at least one polynomial");
    n_ = fs[0].nvars();
    for (auto& g : fs)
      if (g.nvars() != n_) throw UsageError("polynomials have different variable counts");
    eliminate_linear(fs);
    for (auto& g : fs) {
      if (g.is_zero()) continue;
      if (g.degree() == 0) {
        empty_ = true;
        continue;
      }
      gens_.push_back(g);
    }
    std::vector<char> used(n_, 0);
    for (auto& g : gens_)
      for (std::size_t i = 0; i < n_; ++i)
        if (g.depends_on(i)) used[i] = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (subst_index_[i] != SIZE_MAX) continue;
      if (used[i]) {
        vars_.push_back(i);
      } else {
        free_.push_back(i);
      }
    }
    compile();
  }

  u64 order() const { return f_.order(); }
  u64 budget_used() const { return used_; }

  // number of points; throws ResourceError past the budget
  u64 count() {
    if (empty_) return 0;
    u64 q = f_.order();
    u64 factor = 1;
    for (std::size_t i = 0; i < free_.size(); ++i) factor = mul_checked(factor, q);
    if (vars_.empty()) return factor;
    check_estimate();
    u64 total = 0;
    std::vector<Elem> val(vars_.size(), f_.zero());
    dfs_count(0, val, total);
    return mul_checked(total, factor);
  }

  // calls visit on every point (full coordinates); returns false if stopped early
  bool for_each(const Visitor& visit) {
    if (empty_) return true;
    if (!vars_.empty()) check_estimate();
    std::vector<Elem> val(vars_.size(), f_.zero());
    return dfs_visit(0, val, visit);
  }

  std::vector<std::vector<Elem>> first_points(std::size_t limit) {
    std::vector<std::vector<Elem>> out;
    if (limit == 0) return out;
    for_each([&](const std::vector<Elem>& pt) {
      out.push_back(pt);
      return out.size() < limit;
    });
    return out;
  }

 private:
  struct Term {
    Elem c;
    std::vector<std::uint32_t> e;  // exponents indexed by position in vars_
  };
  struct Compiled {
    std::vector<Term> terms;
    std::size_t last;  // largest position in vars_ it depends on
  };

  static u64 mul_checked(u64 a, u64 b) {
    if (b && a > UINT64_MAX / b) throw ResourceError("point count overflows 64 bits");
    return a * b;
  }

  void check_estimate() const {
    double est = 1;
    for (std::size_t i = 0; i + 1 < vars_.size(); ++i) est *= static_cast<double>(f_.order());
    if (est > static_cast<double>(budget_)) throw ResourceError("point enumeration exceeds the budget");
  }

  void charge(u64 c) {
    used_ += c;
    if (used_ > budget_) throw ResourceError("point enumeration exceeds the budget");
  }

  // Affine generators are solved among themselves first and substituted into
  // the others in one pass, which keeps intermediate polynomials small.
  void eliminate_affine(std::vector<Poly>& fs) {
    std::vector<Poly> affine, rest;
    for (auto& g : fs) (g.degree() == 1 ? affine : rest).push_back(g);
    if (affine.empty()) return;
    for (std::size_t k = 0; k < affine.size(); ++k) {
      auto& g = affine[k];
      if (g.degree() < 1) continue;
      std::size_t j = 0;
      while (!g.depends_on(j)) ++j;
      Monomial mj(n_, 0);
      mj[j] = 1;
      Elem c = g.coeff(mj);
      Poly expr = (g - Poly::monomial(f_, mj, c)).scale(f_.neg(f_.inv(c)));
      std::vector<Poly> subs;
      for (std::size_t i = 0; i < n_; ++i) subs.push_back(i == j ? expr : Poly::variable(f_, n_, i));
      for (std::size_t t = k + 1; t < affine.size(); ++t)
        if (affine[t].depends_on(j)) affine[t] = affine[t].compose(subs);
      for (auto& [v, e] : substs_)
        if (e.depends_on(j)) e = e.compose(subs);
      subst_index_[j] = substs_.size();
      substs_.emplace_back(j, expr);
      g = Poly(f_, n_);
    }
    if (!substs_.empty()) {
      std::vector<Poly> subs;
      for (std::size_t i = 0; i < n_; ++i) subs.push_back(Poly::variable(f_, n_, i));
      for (auto& [v, e] : substs_) subs[v] = e;
      for (auto& g : rest) g = g.compose(subs);
    }
    for (auto& g : affine)
      if (!g.is_zero()) rest.push_back(g);  // nonzero constants: no solutions
    fs = std::move(rest);
  }

  void eliminate_linear(std::vector<Poly>& fs) {
    subst_index_.assign(n_, SIZE_MAX);
    eliminate_affine(fs);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < fs.size() && !changed; ++k) {
        auto& g = fs[k];
        if (g.is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (g.degree_in(j) != 1) continue;
          // x_j must occur only in the single term c * x_j
          Monomial mj(n_, 0);
          mj[j] = 1;
          bool ok = true;
          for (auto& [m, c] : g.terms())
            if (m[j] && m != mj) ok = false;
          if (!ok) continue;
          Elem c = g.coeff(mj);
          Poly rest = g - Poly::monomial(f_, mj, c);
          Poly expr = rest.scale(f_.neg(f_.inv(c)));
          std::vector<Poly> subs;
          for (std::size_t i = 0; i < n_; ++i) subs.push_back(i == j ? expr : Poly::variable(f_, n_, i));
          for (std::size_t t = 0; t < fs.size(); ++t)
            if (t != k && fs[t].depends_on(j)) fs[t] = fs[t].compose(subs);
          subst_index_[j] = substs_.size();
          substs_.emplace_back(j, expr);
          fs.erase(fs.begin() + static_cast<long>(k));
          changed = true;
          break;
        }
      }
    }
  }

  void compile() {
    std::vector<std::size_t> pos(n_, SIZE_MAX);
    for (std::size_t i = 0; i < vars_.size(); ++i) pos[vars_[i]] = i;
    maxdeg_.assign(vars_.size(), 0);
    for (auto& g : gens_) {
      Compiled c;
      c.last = 0;
      for (auto& [m, v] : g.terms()) {
        Term t{v, std::vector<std::uint32_t>(vars_.size(), 0)};
        for (std::size_t i = 0; i < n_; ++i) {
          if (!m[i]) continue;
          t.e[pos[i]] = m[i];
          c.last = std::max(c.last, pos[i]);
          maxdeg_[pos[i]] = std::max<std::size_t>(maxdeg_[pos[i]], m[i]);
        }
        c.terms.push_back(std::move(t));
      }
      comp_.push_back(std::move(c));
    }
    pw_.assign(vars_.size(), {});
  }

  void set_powers(std::size_t level, const Elem& v) {
    auto& p = pw_[level];
    p.assign(maxdeg_[level] + 1, f_.one());
    for (std::size_t e = 1; e < p.size(); ++e) p[e] = f_.mul(p[e - 1], v);
  }

  Elem eval_prefix(const Compiled& c, std::size_t upto) const {
    Elem acc = f_.zero();
    for (auto& t : c.terms) {
      Elem m = t.c;
      for (std::size_t i = 0; i <= upto; ++i)
        if (t.e[i]) m = f_.mul(m, pw_[i][t.e[i]]);
      acc = f_.add(acc, m);
    }
    return acc;
  }

  // gcd of the generators whose last variable is `level`, as univariates in it
  up::Poly<F> last_level_gcd(std::size_t level, bool& all_zero) const {
    up::Poly<F> g;
    all_zero = true;
    for (auto& c : comp_) {
      if (c.last != level) continue;
      up::Poly<F> u(maxdeg_[level] + 1, f_.zero());
      for (auto& t : c.terms) {
        Elem m = t.c;
        for (std::size_t i = 0; i < level; ++i)
          if (t.e[i]) m = f_.mul(m, pw_[i][t.e[i]]);
        u[t.e[level]] = f_.add(u[t.e[level]], m);
      }
      up::trim(f_, u);
      if (u.empty()) continue;
      all_zero = false;
      g = g.empty() ? u : up::gcd(f_, g, u);
      if (up::deg<F>(g) == 0) break;
    }
    return g;
  }

  bool prefix_ok(std::size_t level) const {
    for (auto& c : comp_)
      if (c.last == level && !f_.is_zero(eval_prefix(c, level))) return false;
    return true;
  }

  void dfs_count(std::size_t level, std::vector<Elem>& val, u64& total) {
    const u64 q = f_.order();
    if (level + 1 == vars_.size()) {
      charge(1);
      bool all_zero;
      auto g = last_level_gcd(level, all_zero);
      if (all_zero) {
        total += q;
      } else if (up::deg<F>(g) > 0) {
        total += up::count_roots(f_, g);
      }
      return;
    }
    for (u64 i = 0; i < q; ++i) {
      charge(1);
      val[level] = f_.element(i);
      set_powers(level, val[level]);
      if (prefix_ok(level)) dfs_count(level + 1, val, total);
    }
  }

  std::vector<Elem> assemble(const std::vector<Elem>& val, const std::vector<Elem>& freev) const {
    std::vector<Elem> pt(n_, f_.zero());
    for (std::size_t i = 0; i < vars_.size(); ++i) pt[vars_[i]] = val[i];
    for (std::size_t i = 0; i < free_.size(); ++i) pt[free_[i]] = freev[i];
    for (std::size_t s = substs_.size(); s-- > 0;) pt[substs_[s].first] = substs_[s].second.eval(pt);
    return pt;
  }

  bool visit_free(const std::vector<Elem>& val, const Visitor& visit) {
    const u64 q = f_.order();
    std::vector<u64> idx(free_.size(), 0);
    std::vector<Elem> fv(free_.size(), f_.zero());
    while (true) {
      charge(1);
      for (std::size_t i = 0; i < free_.size(); ++i) fv[i] = f_.element(idx[i]);
      if (!visit(assemble(val, fv))) return false;
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == q) idx[k++] = 0;
      if (k == idx.size()) return true;
    }
  }

  bool dfs_visit(std::size_t level, std::vector<Elem>& val, const Visitor& visit) {
    const u64 q = f_.order();
    if (vars_.empty()) return visit_free(val, visit);
    if (level + 1 == vars_.size()) {
      charge(1);
      bool all_zero;
      auto g = last_level_gcd(level, all_zero);
      if (all_zero) {
        for (u64 i = 0; i < q; ++i) {
          val[level] = f_.element(i);
          if (!visit_free(val, visit)) return false;
        }
      } else if (up::deg<F>(g) > 0) {
        for (auto& r : up::roots(f_, g)) {
          val[level] = r;
          if (!visit_free(val, visit)) return false;
        }
      }
      return true;
    }
    for (u64 i = 0; i < q; ++i) {
      charge(1);
      val[level] = f_.element(i);
      set_powers(level, val[level]);
      if (prefix_ok(level) && !dfs_visit(level + 1, val, visit)) return false;
    }
    return true;
  }

  F f_;
  u64 budget_;
  u64 used_ = 0;
  std::size_t n_ = 0;
  bool empty_ = false;
  std::vector<Poly> gens_;
  std::vector<std::size_t> vars_, free_;
  std::vector<std::size_t> subst_index_;
  std::vector<std::pair<std::size_t, Poly>> substs_;
  std::vector<Compiled> comp_;
  std::vector<std::size_t> maxdeg_;
  std::vector<std::vector<Elem>> pw_;
};

template <class F>
PointCount count_points(const F& f, const std::vector<SparsePoly<F>>& fs, u64 budget = 1000000000ULL) {
  PointEnumerator<F> e(f, fs, budget);
  PointCount pc;
  pc.p = f.characteristic();
  pc.k = f.degree();
  pc.n = fs.empty() ? 0 : fs[0].nvars();
  pc.count = e.count();
  pc.budget_used = e.budget_used();
  return pc;
}

}  // namespace plab::variety
