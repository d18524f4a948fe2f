#include "plab/mpoly/ops.hpp"

#include <cctype>
#include <cmath>

namespace plab {

namespace {

struct ParsedTerm {
  Rational c;
  std::vector<std::pair<std::size_t, std::uint32_t>> vars;
};

std::string strip(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  return t;
}

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw UsageError("polynomial parse error at position " + std::to_string(pos) + " (" + what + "): '" + text + "'");
}

Integer read_uint(const std::string& t, std::size_t& i, const std::string& text) {
  std::size_t j = i;
  while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
  if (j == i) parse_fail(text, i, "expected digits");
  Integer v(t.substr(i, j - i));
  i = j;
  return v;
}

}  // namespace

QPolyN parse_rational_poly(const std::string& text, std::size_t nvars) {
  const std::string t = strip(text);
  if (t.empty()) parse_fail(text, 0, "empty");
  std::vector<ParsedTerm> terms;
  std::size_t maxv = 0;
  std::size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    ParsedTerm term{Rational(1), {}};
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') term.c = -1;
      ++i;
    } else if (!first) {
      parse_fail(text, i, "expected + or -");
    }
    first = false;
    bool need_factor = true;
    while (need_factor) {
      if (i >= t.size()) parse_fail(text, i, "dangling operator");
      if (std::isdigit(static_cast<unsigned char>(t[i]))) {
        Integer num = read_uint(t, i, text);
        Rational v(num);
        if (i < t.size() && t[i] == '/') {
          ++i;
          Integer den = read_uint(t, i, text);
          if (den == 0) parse_fail(text, i, "zero denominator");
          v = Rational(num, den);
          v.canonicalize();
        }
        term.c *= v;
      } else if (t[i] == 'x') {
        ++i;
        Integer idx = read_uint(t, i, text);
        if (idx < 1 || idx > 64) parse_fail(text, i, "variable index out of range");
        std::size_t vi = idx.get_ui();
        std::uint32_t e = 1;
        if (i < t.size() && t[i] == '^') {
          ++i;
          Integer ev = read_uint(t, i, text);
          if (ev > 100000) parse_fail(text, i, "exponent too large");
          e = static_cast<std::uint32_t>(ev.get_ui());
        }
        term.vars.emplace_back(vi - 1, e);
        maxv = std::max(maxv, vi);
      } else {
        parse_fail(text, i, "unexpected character");
      }
      if (i < t.size() && t[i] == '*') {
        ++i;
      } else {
        need_factor = false;
      }
    }
    terms.push_back(std::move(term));
  }
  if (nvars == 0) nvars = maxv;
  if (maxv > nvars) throw UsageError("polynomial uses x" + std::to_string(maxv) + " but only " + std::to_string(nvars) + " variables declared");
  QPolyN p(RationalField{}, nvars);
  for (auto& term : terms) {
    Monomial m(nvars, 0);
    for (auto& [v, e] : term.vars) m[v] += e;
    p.add_term(m, term.c);
  }
  return p;
}

ZPolyN to_integer_poly(const QPolyN& f) {
  ZPolyN r(IntegerRing{}, f.nvars());
  for (auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) throw UsageError("coefficient " + c.get_str() + " is not an integer");
    r.add_term(m, c.get_num());
  }
  return r;
}

QPolyN to_rational_poly(const ZPolyN& f) {
  return f.map_coeffs(RationalField{}, [](const Integer& c) { return Rational(c); });
}

ZPolyN parse_integer_poly(const std::string& text, std::size_t nvars) { return to_integer_poly(parse_rational_poly(text, nvars)); }

std::vector<ZPolyN> parse_integer_system(const std::vector<std::string>& lines, std::size_t nvars) {
  std::vector<QPolyN> tmp;
  std::size_t n = nvars;
  for (auto& l : lines) {
    tmp.push_back(parse_rational_poly(l, 0));
    n = std::max(n, tmp.back().nvars());
  }
  std::vector<ZPolyN> out;
  for (auto& l : lines) out.push_back(parse_integer_poly(l, n));
  return out;
}

HeightProfile height_profile(const std::vector<ZPolyN>& fs) {
  HeightProfile hp;
  hp.m = fs.size();
  for (auto& f : fs) {
    hp.h = std::max(hp.h, height(f));
    hp.d = std::max(hp.d, f.degree());
    hp.n = std::max(hp.n, f.nvars());
  }
  hp.sigma = hp.d * static_cast<long>(hp.m) + 2;
  return hp;
}

bool within_bound(unsigned long height, double bound) {
  return static_cast<double>(height) <= std::ceil(bound - 1e-9);
}

double bound_sum(unsigned long h, std::size_t m) { return static_cast<double>(h) + std::log2(static_cast<double>(m)); }

double bound_product(unsigned long h, std::size_t m, long d, std::size_t n) {
  return static_cast<double>(h * m) + static_cast<double>(m) * static_cast<double>(d) * std::log2(static_cast<double>(n) + 1);
}

double bound_composition(unsigned long hg, long deg_g, unsigned long h, std::size_t m, long d, std::size_t n) {
  return static_cast<double>(hg) +
         static_cast<double>(deg_g) * (static_cast<double>(h) + std::log2(static_cast<double>(m) + 1) +
                                       static_cast<double>(d) * std::log2(static_cast<double>(n) + 1));
}

double bound_determinant(std::size_t m, unsigned long h, long d, std::size_t n) {
  return static_cast<double>(m) * (static_cast<double>(h) + std::log2(static_cast<double>(m)) +
                                   static_cast<double>(d) * std::log2(static_cast<double>(n) + 1));
}

double bound_resultant(long d, unsigned long h) {
  return 2.0 * static_cast<double>(d) * (static_cast<double>(h) + std::log2(2.0 * static_cast<double>(d) + 1));
}

double bound_division(long d, unsigned long h) {
  return static_cast<double>(d + 1) * (static_cast<double>(h) + 2 * std::log2(static_cast<double>(d) + 1));
}

double bound_rational_root(unsigned long hf, long d) { return static_cast<double>(hf) * static_cast<double>(d) + 1; }

ProductCheck mul_with_bound_check(const std::vector<ZPolyN>& fs) {
  if (fs.empty()) throw UsageError("mul_with_bound_check needs at least one polynomial");
  ZPolyN prod = ZPolyN::constant(IntegerRing{}, fs[0].nvars(), 1);
  unsigned long h = 0;
  long d = 0;
  for (auto& f : fs) {
    prod = prod * f;
    h = std::max(h, height(f));
    d = std::max(d, f.degree());
  }
  double b = bound_product(h, fs.size(), d, fs[0].nvars());
  unsigned long hp = height(prod);
  return {prod, within_bound(hp, b), hp, b};
}

namespace {

using QPoly1 = std::vector<Rational>;

void qtrim(QPoly1& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly1 qsub(const QPoly1& a, const QPoly1& b) {
  QPoly1 r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  qtrim(r);
  return r;
}

QPoly1 qmul(const QPoly1& a, const QPoly1& b) {
  if (a.empty() || b.empty()) return {};
  QPoly1 r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qtrim(r);
  return r;
}

void qdivmod(const QPoly1& a, const QPoly1& b, QPoly1& q, QPoly1& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  const std::size_t nb = b.size();
  for (std::size_t k = a.size(); k >= nb; --k) {
    Rational c = r[k - 1] / b.back();
    q[k - nb] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) r[k - nb + j] -= c * b[j];
  }
  qtrim(q);
  qtrim(r);
}

}  // namespace

ResultantResult resultant_disc(const ZPoly& f0, const ZPoly& g0) {
  ZPoly f = f0, g = g0;
  zp::trim(f);
  zp::trim(g);
  if (f.empty() || g.empty()) throw DomainError("resultant of the zero polynomial");
  ResultantResult out;
  out.res = det_bareiss(zp::sylvester(f, g));
  out.coprime = out.res != 0;
  if (!out.coprime) return out;
  if (zp::deg(f) == 0 && zp::deg(g) == 0) {
    // empty Sylvester matrix: res = 1 = a f + b g is impossible with deg a < 0;
    // record the convention a = b = 0 only when res would need them.
    out.a = ZPoly{};
    out.b = ZPoly{};
    return out;
  }
  // extended Euclid over Q: s f + t g = 1, then scale by res
  QPoly1 r0(f.begin(), f.end()), r1(g.begin(), g.end());
  QPoly1 s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    QPoly1 q, r;
    qdivmod(r0, r1, q, r);
    QPoly1 s2 = qsub(s0, qmul(q, s1)), t2 = qsub(t0, qmul(q, t1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  Rational lead = r0.back();  // r0 is a nonzero constant since res != 0
  ZPoly a, b;
  for (auto& c : s0) {
    Rational v = c * out.res / lead;
    if (v.get_den() != 1) throw DomainError("cofactor not integral (internal error)");
    a.push_back(v.get_num());
  }
  for (auto& c : t0) {
    Rational v = c * out.res / lead;
    if (v.get_den() != 1) throw DomainError("cofactor not integral (internal error)");
    b.push_back(v.get_num());
  }
  zp::trim(a);
  zp::trim(b);
  out.a = a;
  out.b = b;
  return out;
}

Integer discriminant(const ZPoly& f) { return resultant_disc(f, zp::derivative(f)).res; }

FpPolyN reduce(const ZPolyN& f, const PrimeField& fp) {
  return f.map_coeffs(fp, [&](const Integer& c) { return fp.from_integer(c); });
}

FpPolyN reduce(const QPolyN& f, const PrimeField& fp) {
  return f.map_coeffs(fp, [&](const Rational& c) {
    u64 den = fp.from_integer(c.get_den());
    if (den == 0) throw DomainError("denominator divisible by p");
    return fp.mul(fp.from_integer(c.get_num()), fp.inv(den));
  });
}

FpPolyN reduce(const AlgPolyN& f, const ReductionMap& map) {
  if (!(f.ring().ctx() == map.ctx)) throw UsageError("reduction map belongs to a different number context");
  PrimeField fp(map.p);
  return f.map_coeffs(fp, [&](const ZPoly& c) { return up::eval(fp, zp::reduce(fp, c), map.root); });
}

NormalizeResult mod_q_normalize(const ZPolyN& f, const AlgNumberContext& ctx) {
  if (f.nvars() == 0) throw UsageError("mod_q_normalize needs the z variable");
  const std::size_t n = f.nvars() - 1;
  AlgIntRing ring(ctx);
  // group by x-monomial, collect the z-polynomial
  std::map<Monomial, ZPoly, GrlexLess> groups;
  long dz = 0;
  for (auto& [m, c] : f.terms()) {
    Monomial mx(m.begin(), m.begin() + static_cast<long>(n));
    auto& zpoly = groups[mx];
    std::uint32_t ez = m[n];
    dz = std::max<long>(dz, ez);
    if (zpoly.size() <= ez) zpoly.resize(ez + 1, 0);
    zpoly[ez] += c;
  }
  AlgPolyN out(ring, n);
  for (auto& [mx, zpoly] : groups) {
    ZPoly zz = zpoly;
    zp::trim(zz);
    out.add_term(mx, ring.normalize(zz));
  }
  unsigned long h = std::max(height(f), zp::height(ctx.q()));
  long d = dz;  // the lemma's d = deg_z f (when d < e nothing is reduced)
  double b = bound_division(d, h);
  unsigned long hr = height(out);
  return {out, within_bound(hr, b), b, hr};
}

void divide_monic(const ZPoly& f, const ZPoly& g, ZPoly& q, ZPoly& r) { zp::divmod_monic(f, g, q, r); }

ZPoly to_univariate(const ZPolyN& f, std::size_t var) {
  ZPoly r;
  for (auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var && m[i]) throw UsageError("polynomial is not univariate");
    if (r.size() <= m[var]) r.resize(m[var] + 1, 0);
    r[m[var]] += c;
  }
  zp::trim(r);
  return r;
}

ZPolyN from_univariate(const ZPoly& f, std::size_t nvars, std::size_t var) {
  ZPolyN r(IntegerRing{}, nvars);
  for (std::size_t i = 0; i < f.size(); ++i) {
    Monomial m(nvars, 0);
    m[var] = static_cast<std::uint32_t>(i);
    r.add_term(m, f[i]);
  }
  return r;
}

}  // namespace plab
