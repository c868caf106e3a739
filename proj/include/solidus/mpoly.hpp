#ifndef SOLIDUS_MPOLY_HPP
#define SOLIDUS_MPOLY_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "solidus/upoly.hpp"

namespace solidus {

/// Sparse multivariate polynomial over a field K with a fixed ordered
/// variable list. No zero coefficients are stored; exponent vectors always
/// have the length of the variable list.
template <typename K>
class mpoly {
 public:
  using exps = std::vector<int>;

  mpoly() = default;
  explicit mpoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static mpoly constant(std::vector<std::string> vars, K v) {
    mpoly p(std::move(vars));
    if (!solidus::is_zero(v)) p.terms_[exps(p.vars_.size(), 0)] = std::move(v);
    return p;
  }
  static mpoly var(std::vector<std::string> vars, const std::string& name,
                   int power = 1) {
    mpoly p(std::move(vars));
    exps e(p.vars_.size(), 0);
    e[p.var_index(name)] = power;
    p.terms_[std::move(e)] = field_traits<K>::one();
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<exps, K>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    throw kernel_error("mpoly: unknown variable " + name);
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }
  int degree_in(int v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }
  int degree_in(const std::string& name) const { return degree_in(var_index(name)); }

  bool is_homogeneous(int* deg_out = nullptr) const {
    int d = total_degree();
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
  }

  K coeff(const exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_traits<K>::zero() : it->second;
  }

  void add_term(const exps& e, const K& c) { accumulate(e, c); }

  friend mpoly operator+(const mpoly& a, const mpoly& b) {
    a.check_same_vars(b);
    mpoly r = a;
    for (const auto& [e, c] : b.terms_) r.accumulate(e, c);
    return r;
  }
  friend mpoly operator-(const mpoly& a, const mpoly& b) {
    a.check_same_vars(b);
    mpoly r = a;
    for (const auto& [e, c] : b.terms_) r.accumulate(e, field_traits<K>::zero() - c);
    return r;
  }
  mpoly operator-() const {
    mpoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = field_traits<K>::zero() - c;
    return r;
  }
  friend mpoly operator*(const mpoly& a, const mpoly& b) {
    a.check_same_vars(b);
    mpoly r(a.vars_);
    exps e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.accumulate(e, ca * cb);
      }
    return r;
  }
  friend mpoly operator*(const K& s, const mpoly& a) {
    mpoly r(a.vars_);
    if (solidus::is_zero(s)) return r;
    for (const auto& [e, c] : a.terms_) {
      K v = s * c;
      if (!solidus::is_zero(v)) r.terms_[e] = std::move(v);
    }
    return r;
  }
  friend bool operator==(const mpoly& a, const mpoly& b) {
    return a.vars_ == b.vars_ && (a - b).is_zero();
  }
  friend bool operator!=(const mpoly& a, const mpoly& b) { return !(a == b); }

  mpoly derivative(const std::string& name) const { return derivative(var_index(name)); }
  mpoly derivative(int v) const {
    mpoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      exps d = e;
      d[v] -= 1;
      r.accumulate(d, K(long(e[v])) * c);
    }
    return r;
  }

  K eval(const std::vector<K>& point) const {
    if (point.size() != vars_.size()) throw kernel_error("mpoly: eval arity");
    K r = field_traits<K>::zero();
    for (const auto& [e, c] : terms_) {
      K m = c;
      for (size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) m = m * point[i];
      r = r + m;
    }
    return r;
  }

  /// Substitutes value for one variable; the variable stays in the list.
  mpoly subs(int v, const K& value) const {
    mpoly r(vars_);
    for (const auto& [e, c] : terms_) {
      K m = c;
      for (int k = 0; k < e[v]; ++k) m = m * value;
      exps d = e;
      d[v] = 0;
      r.accumulate(d, m);
    }
    return r;
  }

  /// Full polynomial substitution var -> g (same variable list).
  mpoly subs_poly(int v, const mpoly& g) const {
    check_same_vars(g);
    // bucket by power of v, then Horner in g
    int dv = degree_in(v);
    std::vector<mpoly> bucket(dv + 1, mpoly(vars_));
    for (const auto& [e, c] : terms_) {
      exps d = e;
      int k = d[v];
      d[v] = 0;
      bucket[k].accumulate(d, c);
    }
    mpoly r(vars_);
    for (int k = dv; k >= 0; --k) r = r * g + bucket[k];
    return r;
  }

  /// Applies the linear change x_i -> sum_j A[i][j] * x_j.
  mpoly linear_change(const std::vector<std::vector<K>>& a) const {
    size_t n = vars_.size();
    std::vector<mpoly> images;
    images.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      mpoly g(vars_);
      for (size_t j = 0; j < n; ++j) {
        exps e(n, 0);
        e[j] = 1;
        g.accumulate(e, a[i][j]);
      }
      images.push_back(std::move(g));
    }
    mpoly r(vars_);
    for (const auto& [e, c] : terms_) {
      mpoly m = constant(vars_, c);
      for (size_t i = 0; i < n; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * images[i];
      r = r + m;
    }
    return r;
  }

  /// Dense coefficient list with respect to one variable; entries keep the
  /// full variable list with degree 0 in v.
  std::vector<mpoly> coeffs_by(int v) const {
    std::vector<mpoly> out(degree_in(v) + 1, mpoly(vars_));
    for (const auto& [e, c] : terms_) {
      exps d = e;
      int k = d[v];
      d[v] = 0;
      out[k].terms_[std::move(d)] = c;
    }
    return out;
  }
  static mpoly from_coeffs_by(int v, const std::vector<mpoly>& coeff,
                              const std::vector<std::string>& vars) {
    mpoly r(vars);
    for (size_t k = 0; k < coeff.size(); ++k)
      for (const auto& [e, c] : coeff[k].terms_) {
        exps d = e;
        d[v] += static_cast<int>(k);
        r.terms_[std::move(d)] = c;
      }
    return r;
  }

  /// Drops a variable the polynomial does not involve.
  mpoly drop_var(int v) const {
    if (degree_in(v) != 0) throw kernel_error("mpoly: drop of active variable");
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + v);
    mpoly r(nv);
    for (const auto& [e, c] : terms_) {
      exps d = e;
      d.erase(d.begin() + v);
      r.terms_[std::move(d)] = c;
    }
    return r;
  }

  /// Embeds into a larger variable list (must contain all current vars).
  mpoly with_vars(const std::vector<std::string>& nv) const {
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(nv.begin(), nv.end(), vars_[i]);
      if (it == nv.end()) throw kernel_error("mpoly: variable lost in embedding");
      pos[i] = static_cast<int>(it - nv.begin());
    }
    mpoly r(nv);
    for (const auto& [e, c] : terms_) {
      exps d(nv.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) d[pos[i]] = e[i];
      r.terms_[std::move(d)] = c;
    }
    return r;
  }

  /// Sets v = 1 and removes it from the variable list.
  mpoly dehomogenize(int v) const {
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + v);
    mpoly r(nv);
    for (const auto& [e, c] : terms_) {
      exps d = e;
      d.erase(d.begin() + v);
      r.accumulate(d, c);
    }
    return r;
  }

  /// Inserts variable `name` at slot v, homogenizing to the given degree.
  mpoly homogenize(int v, const std::string& name, int deg) const {
    std::vector<std::string> nv = vars_;
    nv.insert(nv.begin() + v, name);
    mpoly r(nv);
    for (const auto& [e, c] : terms_) {
      int s = std::accumulate(e.begin(), e.end(), 0);
      if (s > deg) throw kernel_error("mpoly: homogenize degree too small");
      exps d = e;
      d.insert(d.begin() + v, deg - s);
      r.terms_[std::move(d)] = c;
    }
    return r;
  }

  /// Canonical text: terms in descending lexicographic exponent order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string mono;
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (it->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
      }
      std::string cs = field_traits<K>::str(it->second);
      std::string term;
      if (mono.empty())
        term = cs;
      else if (cs == "1")
        term = mono;
      else if (cs == "-1")
        term = "-" + mono;
      else if (cs.find_first_of("+-", 1) != std::string::npos)
        term = "(" + cs + ")*" + mono;  // number-field coefficient with a sum
      else
        term = cs + "*" + mono;
      if (s.empty())
        s = term;
      else if (!term.empty() && term[0] == '-')
        s += " - " + term.substr(1);
      else
        s += " + " + term;
    }
    return s;
  }

 private:
  void accumulate(const exps& e, const K& c) {
    if (solidus::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (solidus::is_zero(it->second)) terms_.erase(it);
    }
  }
  void check_same_vars(const mpoly& o) const {
    if (vars_ != o.vars_)
      throw kernel_error("mpoly: variable-list mismatch");
  }

  std::vector<std::string> vars_;
  std::map<exps, K> terms_;
};

/// Maps coefficients K -> K2 (e.g. embedding rationals into a number field).
template <typename K2, typename K, typename F>
mpoly<K2> map_coeffs(const mpoly<K>& p, F&& f) {
  mpoly<K2> r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, f(c));
  return r;
}

inline mpoly<nf_element> to_nf(const mpoly<rational>& p) {
  return map_coeffs<nf_element>(p, [](const rational& c) { return nf_element(c); });
}

/// Dense view in one variable as a univariate with K coefficients; requires
/// every other variable to have degree zero.
template <typename K>
upoly<K> to_upoly(const mpoly<K>& p, int v) {
  std::vector<K> c(p.degree_in(v) + 1, field_traits<K>::zero());
  for (const auto& [e, coe] : p.terms()) {
    for (size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != v && e[i] != 0)
        throw kernel_error("to_upoly: polynomial not univariate");
    c[e[v]] = coe;
  }
  return upoly<K>(std::move(c));
}

template <typename K>
mpoly<K> from_upoly(const upoly<K>& u, std::vector<std::string> vars, int v) {
  mpoly<K> r(std::move(vars));
  for (int i = 0; i <= u.degree(); ++i) {
    typename mpoly<K>::exps e(r.vars().size(), 0);
    e[v] = i;
    r.add_term(std::move(e), u.coeff(i));
  }
  return r;
}

}  // namespace solidus

#endif
