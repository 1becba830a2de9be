//  Copyright 2026 The spclat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spclat/error.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"

namespace spclat {

inline constexpr std::size_t kDefaultSearchBound = 16;
inline constexpr std::size_t kConeNodeBudget = 2'000'000;
inline constexpr std::size_t kDefaultClassCap = 256;

// Outcome of a bounded decision procedure. `No` is only ever returned
// with a certificate (a separating coordinate, or an exhausted finite
// search); when the bounded search runs out without either certificate
// the answer is `Inconclusive`.
enum class Decision { Yes, No, Inconclusive };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    default: return "inconclusive";
  }
}

// Element of Z^r x Z/m_1 x ... x Z/m_t, free coordinates first.
using GroupElement = std::vector<long long>;

struct ConeDecision {
  Decision decision = Decision::Inconclusive;
  std::vector<long long> coefficients;  // witness for Yes
  std::string reason;                   // certificate or failure note
};

struct PrincipalDecision {
  Decision decision = Decision::Inconclusive;
  long long multiple = -1;              // witness n for Yes
  std::vector<long long> coefficients;  // cone witness for n*b - a
  std::string reason;
};

struct JoinOutcome {
  enum class Kind { Found, NotFound, NotUnique };
  Kind kind = Kind::NotFound;
  GroupElement join;                               // for Found
  std::vector<GroupElement> minimal_upper_bounds;  // for NotUnique
  std::string reason;
};

namespace detail {

using Mat = std::vector<std::vector<long long>>;

inline Mat identity_mat(std::size_t n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Smith normal form with all four transforms tracked:
// u * a * v = d, with u and v unimodular over the integers.
struct SmithResult {
  Mat d, u, uinv, v, vinv;
  std::size_t rank = 0;
};

inline SmithResult smith(Mat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult r;
  r.u = identity_mat(rows);
  r.uinv = identity_mat(rows);
  r.v = identity_mat(cols);
  r.vinv = identity_mat(cols);

  auto row_add = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t k = 0; k < cols; ++k) a[dst][k] += q * a[src][k];
    for (std::size_t k = 0; k < rows; ++k) r.u[dst][k] += q * r.u[src][k];
    for (std::size_t k = 0; k < rows; ++k) r.uinv[k][src] -= q * r.uinv[k][dst];
  };
  auto col_add = [&](std::size_t dst, std::size_t src, long long q) {
    for (std::size_t k = 0; k < rows; ++k) a[k][dst] += q * a[k][src];
    for (std::size_t k = 0; k < cols; ++k) r.v[k][dst] += q * r.v[k][src];
    for (std::size_t k = 0; k < cols; ++k) r.vinv[src][k] -= q * r.vinv[dst][k];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(r.u[i], r.u[j]);
    for (std::size_t k = 0; k < rows; ++k) std::swap(r.uinv[k][i], r.uinv[k][j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(a[k][i], a[k][j]);
    for (std::size_t k = 0; k < cols; ++k) std::swap(r.v[k][i], r.v[k][j]);
    std::swap(r.vinv[i], r.vinv[j]);
  };
  auto row_negate = [&](std::size_t i) {
    for (std::size_t k = 0; k < cols; ++k) a[i][k] = -a[i][k];
    for (std::size_t k = 0; k < rows; ++k) r.u[i][k] = -r.u[i][k];
    for (std::size_t k = 0; k < rows; ++k) r.uinv[k][i] = -r.uinv[k][i];
  };

  std::size_t pos = 0;
  while (pos < rows && pos < cols) {
    std::size_t pi = pos, pj = pos;
    long long best = 0;
    for (std::size_t i = pos; i < rows; ++i)
      for (std::size_t j = pos; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
          best = std::llabs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    row_swap(pos, pi);
    col_swap(pos, pj);
    if (a[pos][pos] < 0) row_negate(pos);

    bool clean = true;
    for (std::size_t i = pos + 1; i < rows; ++i)
      if (a[i][pos] != 0) {
        row_add(i, pos, -(a[i][pos] / a[pos][pos]));
        if (a[i][pos] != 0) clean = false;
      }
    for (std::size_t j = pos + 1; j < cols; ++j)
      if (a[pos][j] != 0) {
        col_add(j, pos, -(a[pos][j] / a[pos][pos]));
        if (a[pos][j] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainders appeared; repick pivot

    // Divisibility chain: fold a non-multiple into the pivot row.
    bool divides = true;
    for (std::size_t i = pos + 1; i < rows && divides; ++i)
      for (std::size_t j = pos + 1; j < cols && divides; ++j)
        if (a[i][j] % a[pos][pos] != 0) {
          row_add(pos, i, 1);
          divides = false;
        }
    if (!divides) continue;
    ++pos;
  }
  r.rank = pos;
  r.d = std::move(a);
  return r;
}

// Particular integer solution of a*x = b from a precomputed Smith
// form, or nullopt when none exists.
inline std::optional<std::vector<long long>> smith_solve(const SmithResult& s,
                                                         const std::vector<long long>& b) {
  const std::size_t rows = s.u.size();
  const std::size_t cols = s.v.size();
  std::vector<long long> z(rows, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < rows; ++k) z[i] += s.u[i][k] * b[k];
  std::vector<long long> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    long long d = (i < cols) ? s.d[i][i] : 0;
    if (d != 0) {
      if (z[i] % d != 0) return std::nullopt;
      y[i] = z[i] / d;
    } else if (z[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<long long> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t k = 0; k < cols; ++k) x[i] += s.v[i][k] * y[k];
  return x;
}

inline std::string coords_string(const GroupElement& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out;
}

}  // namespace detail

// Presentation of the subgroup of G generated by the cone (equivalently
// by differences of cone elements) as an abstract finitely generated
// abelian group Z^f x Z/d_1 x ..., with maps in and out of G.
class IdentityComponent {
 public:
  IdentityComponent(std::size_t amb_free, std::vector<long long> amb_torsion,
                    std::vector<GroupElement> gens)
      : amb_free_(amb_free), amb_torsion_(std::move(amb_torsion)), gens_(std::move(gens)) {
    const std::size_t s = gens_.size();
    const std::size_t t = amb_torsion_.size();
    const std::size_t rows = amb_free_ + t;
    rows_ = rows ? rows : 1;  // keep a zero row so widths survive
    detail::Mat a(rows_, std::vector<long long>(s + t, 0));
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < rows; ++i) a[i][j] = gens_[j][i];
    for (std::size_t j = 0; j < t; ++j) a[amb_free_ + j][s + j] = amb_torsion_[j];
    solve_form_ = detail::smith(std::move(a));

    // Kernel of the generator map, projected to coefficient space:
    // columns of V past the rank.
    const std::size_t k = (s + t) - solve_form_.rank;
    detail::Mat kmat(s, std::vector<long long>(k, 0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < s; ++i)
        kmat[i][j] = solve_form_.v[i][solve_form_.rank + j];
    quot_form_ = detail::smith(std::move(kmat));

    factors_.assign(s, 0);
    for (std::size_t i = 0; i < quot_form_.rank; ++i) factors_[i] = quot_form_.d[i][i];
    for (std::size_t i = 0; i < s; ++i) {
      if (factors_[i] == 0)
        free_slots_.push_back(i);
      else if (factors_[i] > 1)
        torsion_slots_.push_back(i);
    }
  }

  std::size_t free_rank() const { return free_slots_.size(); }
  std::vector<long long> torsion() const {
    std::vector<long long> t;
    for (std::size_t i : torsion_slots_) t.push_back(factors_[i]);
    return t;
  }

  // Image in the ambient group of an abstract element (free
  // coordinates first, then torsion coordinates).
  GroupElement embed(const std::vector<long long>& abstract_coords) const {
    if (abstract_coords.size() != free_slots_.size() + torsion_slots_.size())
      throw InvalidInput("abstract element has the wrong number of coordinates");
    const std::size_t s = gens_.size();
    std::vector<long long> z(s, 0);
    for (std::size_t i = 0; i < free_slots_.size(); ++i) z[free_slots_[i]] = abstract_coords[i];
    for (std::size_t i = 0; i < torsion_slots_.size(); ++i)
      z[torsion_slots_[i]] = abstract_coords[free_slots_.size() + i];
    std::vector<long long> c(s, 0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k) c[i] += quot_form_.uinv[i][k] * z[k];
    GroupElement out(amb_free_ + amb_torsion_.size(), 0);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[j] * gens_[j][i];
    normalize_ambient(out);
    return out;
  }

  // Abstract coordinates of x, when x lies in the component.
  std::optional<std::vector<long long>> express(const GroupElement& x) const {
    const std::size_t s = gens_.size();
    const std::size_t t = amb_torsion_.size();
    if (x.size() != amb_free_ + t) throw InvalidInput("element has the wrong dimension");
    std::vector<long long> b(rows_, 0);
    for (std::size_t i = 0; i < amb_free_ + t; ++i) b[i] = x[i];
    auto sol = detail::smith_solve(solve_form_, b);
    if (!sol) return std::nullopt;
    std::vector<long long> z(s, 0);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k) z[i] += quot_form_.u[i][k] * (*sol)[k];
    std::vector<long long> out;
    for (std::size_t i : free_slots_) out.push_back(z[i]);
    for (std::size_t i : torsion_slots_) {
      long long d = factors_[i];
      out.push_back(((z[i] % d) + d) % d);
    }
    return out;
  }

 private:
  void normalize_ambient(GroupElement& e) const {
    for (std::size_t j = 0; j < amb_torsion_.size(); ++j) {
      long long m = amb_torsion_[j];
      e[amb_free_ + j] = ((e[amb_free_ + j] % m) + m) % m;
    }
  }

  std::size_t amb_free_;
  std::vector<long long> amb_torsion_;
  std::vector<GroupElement> gens_;
  std::size_t rows_ = 1;
  detail::SmithResult solve_form_;  // of the stacked generator matrix
  detail::SmithResult quot_form_;   // of the kernel, for Z^s / K
  std::vector<long long> factors_;
  std::vector<std::size_t> free_slots_, torsion_slots_;
};

struct SubgroupResult;

// Finitely generated partially ordered abelian group
// Z^r x Z/m_1 x ... x Z/m_t whose positive cone is generated by a
// finite list of elements. Order queries are bounded searches returning
// three-valued, certificate-carrying answers.
class OrderedAbelianGroup {
 public:
  OrderedAbelianGroup(std::size_t free_rank, std::vector<long long> torsion_orders,
                      std::vector<GroupElement> cone_gens,
                      std::size_t default_bound = kDefaultSearchBound)
      : r_(free_rank), m_(std::move(torsion_orders)), gens_(std::move(cone_gens)),
        bound_(default_bound) {
    for (long long m : m_)
      if (m < 2) throw InvalidInput("torsion orders must be at least 2");
    for (auto& g : gens_) {
      if (g.size() != dim()) throw InvalidInput("cone generator has the wrong dimension");
      normalize(g);
    }
    // Pointedness: it suffices that no single nonzero generator has its
    // inverse in the cone (any cancelling combination yields one that does).
    for (const auto& g : gens_) {
      if (is_zero(g)) continue;
      ConeDecision d = cone_member(neg(g), bound_);
      if (d.decision == Decision::Yes)
        throw InvalidInput("cone is not pointed: both " + to_string(g) +
                           " and its inverse lie in it");
      if (d.decision == Decision::Inconclusive)
        throw Inconclusive("could not certify that the cone is pointed at " + to_string(g) +
                           " within bound " + std::to_string(bound_));
    }
  }

  std::size_t free_rank() const { return r_; }
  const std::vector<long long>& torsion_orders() const { return m_; }
  std::size_t dim() const { return r_ + m_.size(); }
  const std::vector<GroupElement>& cone_generators() const { return gens_; }
  std::size_t default_bound() const { return bound_; }

  GroupElement zero() const { return GroupElement(dim(), 0); }
  bool is_zero(const GroupElement& e) const {
    GroupElement n = e;
    normalize(n);
    for (long long v : n)
      if (v != 0) return false;
    return true;
  }
  void normalize(GroupElement& e) const {
    if (e.size() != dim()) throw InvalidInput("element has the wrong dimension");
    for (std::size_t j = 0; j < m_.size(); ++j) {
      long long m = m_[j];
      e[r_ + j] = ((e[r_ + j] % m) + m) % m;
    }
  }
  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    GroupElement out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = a[i] + b[i];
    normalize(out);
    return out;
  }
  GroupElement sub(const GroupElement& a, const GroupElement& b) const {
    GroupElement out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = a[i] - b[i];
    normalize(out);
    return out;
  }
  GroupElement neg(const GroupElement& a) const { return sub(zero(), a); }
  GroupElement scale(long long n, const GroupElement& a) const {
    GroupElement out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = n * a[i];
    normalize(out);
    return out;
  }
  bool equal(const GroupElement& a, const GroupElement& b) const { return is_zero(sub(a, b)); }

  std::string to_string(const GroupElement& e) const {
    GroupElement n = e;
    normalize(n);
    return "(" + detail::coords_string(n) + ")";
  }

  // Does x lie in the cone? Searches for nonnegative integer
  // coefficients over the generators. Coefficients get exact caps where
  // a sign-definite free coordinate provides one, and torsion-only
  // generators are capped by their order; `bound` truncates only the
  // remaining coefficients, in which case a fruitless search comes back
  // Inconclusive rather than No.
  ConeDecision cone_member(const GroupElement& x_in, std::size_t bound) const {
    GroupElement x = x_in;
    normalize(x);
    ConeDecision out;
    if (is_zero(x)) {
      out.decision = Decision::Yes;
      out.coefficients.assign(gens_.size(), 0);
      out.reason = "zero element";
      return out;
    }

    const std::size_t s = gens_.size();
    std::vector<char> all_ge(r_, 1), all_le(r_, 1);
    for (std::size_t k = 0; k < r_; ++k)
      for (const auto& g : gens_) {
        if (g[k] < 0) all_ge[k] = 0;
        if (g[k] > 0) all_le[k] = 0;
      }
    for (std::size_t k = 0; k < r_; ++k) {
      if (all_ge[k] && x[k] < 0) {
        out.decision = Decision::No;
        out.reason = "free coordinate " + std::to_string(k) +
                     " is nonnegative on the cone but negative on " + to_string(x);
        return out;
      }
      if (all_le[k] && x[k] > 0) {
        out.decision = Decision::No;
        out.reason = "free coordinate " + std::to_string(k) +
                     " is nonpositive on the cone but positive on " + to_string(x);
        return out;
      }
    }

    std::vector<long long> cap(s, -1);  // -1 = no exact cap yet
    bool complete = true;
    for (std::size_t i = 0; i < s; ++i) {
      const auto& g = gens_[i];
      bool free_zero = true;
      for (std::size_t k = 0; k < r_; ++k)
        if (g[k] != 0) free_zero = false;
      if (free_zero) {
        long long ord = 1;
        for (std::size_t j = 0; j < m_.size(); ++j)
          ord = std::lcm(ord, m_[j] / std::gcd(g[r_ + j], m_[j]));
        cap[i] = ord - 1;
        continue;
      }
      for (std::size_t k = 0; k < r_; ++k) {
        if (g[k] > 0 && all_ge[k]) {
          long long c = x[k] / g[k];
          if (cap[i] < 0 || c < cap[i]) cap[i] = c;
        }
        if (g[k] < 0 && all_le[k]) {
          long long c = x[k] / g[k];
          if (cap[i] < 0 || c < cap[i]) cap[i] = c;
        }
      }
      if (cap[i] < 0) {
        cap[i] = static_cast<long long>(bound);
        complete = false;
      }
    }

    std::vector<std::vector<char>> suf_ge(s + 1, std::vector<char>(r_, 1));
    std::vector<std::vector<char>> suf_le(s + 1, std::vector<char>(r_, 1));
    for (std::size_t i = s; i-- > 0;)
      for (std::size_t k = 0; k < r_; ++k) {
        suf_ge[i][k] = suf_ge[i + 1][k] && gens_[i][k] >= 0;
        suf_le[i][k] = suf_le[i + 1][k] && gens_[i][k] <= 0;
      }

    std::vector<long long> coeff(s, 0);
    std::size_t budget = kConeNodeBudget;
    bool exhausted = false;

    auto leaf_ok = [&](const GroupElement& rem) {
      for (std::size_t k = 0; k < r_; ++k)
        if (rem[k] != 0) return false;
      for (std::size_t j = 0; j < m_.size(); ++j)
        if (rem[r_ + j] % m_[j] != 0) return false;
      return true;
    };
    auto rec = [&](auto&& self, std::size_t i, GroupElement rem) -> bool {
      if (exhausted) return false;
      if (budget == 0) {
        exhausted = true;
        return false;
      }
      --budget;
      if (i == s) return leaf_ok(rem);
      for (std::size_t k = 0; k < r_; ++k) {
        if (suf_ge[i][k] && rem[k] < 0) return false;
        if (suf_le[i][k] && rem[k] > 0) return false;
      }
      // Largest coefficient first: on sign-definite cones the greedy
      // branch reaches a witness without backtracking.
      for (std::size_t k = 0; k < dim(); ++k) rem[k] -= cap[i] * gens_[i][k];
      for (long long c = cap[i]; c >= 0; --c) {
        coeff[i] = c;
        if (self(self, i + 1, rem)) return true;
        if (exhausted) return false;
        for (std::size_t k = 0; k < dim(); ++k) rem[k] += gens_[i][k];
      }
      return false;
    };
    bool found = rec(rec, 0, x);

    if (found) {
      out.decision = Decision::Yes;
      out.coefficients = coeff;
      out.reason = "nonnegative combination of the generators";
      return out;
    }
    if (exhausted || !complete) {
      out.decision = Decision::Inconclusive;
      out.reason = "no combination found for " + to_string(x) + " within coefficient bound " +
                   std::to_string(bound) + (exhausted ? " (search budget exhausted)" : "");
      return out;
    }
    out.decision = Decision::No;
    out.reason = "exhaustive search over exact coefficient caps found no combination for " +
                 to_string(x);
    return out;
  }
  ConeDecision cone_member(const GroupElement& x) const { return cone_member(x, bound_); }

  ConeDecision leq(const GroupElement& a, const GroupElement& b, std::size_t bound) const {
    return cone_member(sub(b, a), bound);
  }
  ConeDecision leq(const GroupElement& a, const GroupElement& b) const { return leq(a, b, bound_); }

  // Principal-ideal inclusion <a> <= <b>: is a dominated by some
  // natural multiple of b? Both arguments must lie in the cone. Yes
  // carries the multiple; No needs a certificate valid for every n: a
  // separating sign-definite coordinate, or b of finite order with all
  // of its distinct multiples ruled out.
  PrincipalDecision principal_leq(const GroupElement& a_in, const GroupElement& b_in,
                                  std::size_t bound) const {
    GroupElement a = a_in, b = b_in;
    normalize(a);
    normalize(b);
    for (const GroupElement* e : {&a, &b}) {
      ConeDecision in_cone = cone_member(*e, bound);
      if (in_cone.decision == Decision::No)
        throw NotInCone("principal ideals are generated by cone elements, and " + to_string(*e) +
                        " is not in the cone: " + in_cone.reason);
      if (in_cone.decision == Decision::Inconclusive)
        throw Inconclusive("cone membership of " + to_string(*e) +
                           " is inconclusive within bound " + std::to_string(bound));
    }
    PrincipalDecision out;

    std::vector<char> all_ge(r_, 1), all_le(r_, 1);
    for (std::size_t k = 0; k < r_; ++k)
      for (const auto& g : gens_) {
        if (g[k] < 0) all_ge[k] = 0;
        if (g[k] > 0) all_le[k] = 0;
      }
    for (std::size_t k = 0; k < r_; ++k) {
      if (all_ge[k] && b[k] == 0 && a[k] > 0) {
        out.decision = Decision::No;
        out.reason = "free coordinate " + std::to_string(k) +
                     " is nonnegative on the cone, zero on every multiple of " + to_string(b) +
                     ", but positive on " + to_string(a);
        return out;
      }
      if (all_le[k] && b[k] == 0 && a[k] < 0) {
        out.decision = Decision::No;
        out.reason = "free coordinate " + std::to_string(k) +
                     " is nonpositive on the cone, zero on every multiple of " + to_string(b) +
                     ", but negative on " + to_string(a);
        return out;
      }
    }

    bool b_free_zero = true;
    for (std::size_t k = 0; k < r_; ++k)
      if (b[k] != 0) b_free_zero = false;
    long long phase = 1;  // order of b when its free part vanishes
    for (std::size_t j = 0; j < m_.size(); ++j)
      phase = std::lcm(phase, m_[j] / std::gcd(b[r_ + j], m_[j]));
    const long long n_max = b_free_zero ? std::min<long long>(phase - 1, bound)
                                        : static_cast<long long>(bound);
    const bool complete = b_free_zero && phase - 1 <= static_cast<long long>(bound);

    bool saw_inconclusive = false;
    for (long long n = 0; n <= n_max; ++n) {
      ConeDecision d = cone_member(sub(scale(n, b), a), bound);
      if (d.decision == Decision::Yes) {
        out.decision = Decision::Yes;
        out.multiple = n;
        out.coefficients = d.coefficients;
        out.reason = to_string(a) + " <= " + std::to_string(n) + "*" + to_string(b);
        return out;
      }
      if (d.decision == Decision::Inconclusive) saw_inconclusive = true;
    }
    if (complete && !saw_inconclusive) {
      out.decision = Decision::No;
      out.reason = "every distinct multiple of the finite-order element " + to_string(b) +
                   " was ruled out";
      return out;
    }
    out.decision = Decision::Inconclusive;
    out.reason = "no multiple n <= " + std::to_string(bound) + " with " + to_string(a) +
                 " <= n*" + to_string(b);
    return out;
  }
  PrincipalDecision principal_leq(const GroupElement& a, const GroupElement& b) const {
    return principal_leq(a, b, bound_);
  }

  // Bounded search for the least upper bound of a and b. Candidates
  // range over the coordinate box [min(a_k,b_k)-bound, max(a_k,b_k)+bound]
  // per free coordinate times every torsion residue. Found demands a
  // unique minimal upper bound; NotUnique reports several incomparable
  // minimal ones; an undecidable comparison that could change the
  // verdict raises Inconclusive.
  JoinOutcome try_join(const GroupElement& a_in, const GroupElement& b_in,
                       std::size_t bound) const {
    GroupElement a = a_in, b = b_in;
    normalize(a);
    normalize(b);
    JoinOutcome out;

    std::vector<long long> lo(dim()), hi(dim());
    double cells = 1;
    for (std::size_t k = 0; k < r_; ++k) {
      lo[k] = std::min(a[k], b[k]) - static_cast<long long>(bound);
      hi[k] = std::max(a[k], b[k]) + static_cast<long long>(bound);
      cells *= static_cast<double>(hi[k] - lo[k] + 1);
    }
    for (std::size_t j = 0; j < m_.size(); ++j) {
      lo[r_ + j] = 0;
      hi[r_ + j] = m_[j] - 1;
      cells *= static_cast<double>(m_[j]);
    }
    if (cells > static_cast<double>(kConeNodeBudget))
      throw SizeGuard("join search box around " + to_string(a) + " and " + to_string(b) +
                      " has more than " + std::to_string(kConeNodeBudget) +
                      " cells; lower the bound");

    // Pareto scan: keep the minimal certified upper bounds seen so far.
    // Yes-answers are genuine cone memberships, so their transitive
    // closure is sound and dropped candidates stay dominated.
    std::vector<GroupElement> minimal;
    std::vector<GroupElement> uncertain;
    GroupElement c(dim());
    auto visit = [&](const GroupElement& u) {
      ConeDecision da = leq(a, u, bound);
      ConeDecision db = leq(b, u, bound);
      if (da.decision == Decision::No || db.decision == Decision::No) return;
      if (da.decision != Decision::Yes || db.decision != Decision::Yes) {
        uncertain.push_back(u);
        return;
      }
      std::vector<GroupElement> kept;
      for (const auto& m : minimal) {
        ConeDecision mu = leq(m, u, bound);
        if (mu.decision == Decision::Yes) return;  // dominated, drop u
        ConeDecision um = leq(u, m, bound);
        if (mu.decision == Decision::Inconclusive || um.decision == Decision::Inconclusive)
          throw Inconclusive("could not order the upper bounds " + to_string(m) + " and " +
                             to_string(u) + " within bound " + std::to_string(bound));
        if (um.decision != Decision::Yes) kept.push_back(m);
      }
      kept.push_back(u);
      minimal = std::move(kept);
    };
    auto scan = [&](auto&& self, std::size_t k) -> void {
      if (k == dim()) {
        visit(c);
        return;
      }
      for (long long v = lo[k]; v <= hi[k]; ++v) {
        c[k] = v;
        self(self, k + 1);
      }
    };
    scan(scan, 0);

    for (const auto& q : uncertain) {
      bool harmless = false;
      for (const auto& m : minimal)
        if (leq(m, q, bound).decision == Decision::Yes) {
          harmless = true;
          break;
        }
      if (!harmless)
        throw Inconclusive("upper-bound status of the candidate " + to_string(q) +
                           " is inconclusive within bound " + std::to_string(bound));
    }

    if (minimal.empty()) {
      out.kind = JoinOutcome::Kind::NotFound;
      out.reason = "no upper bound of " + to_string(a) + " and " + to_string(b) +
                   " inside the search box";
      return out;
    }
    if (minimal.size() == 1) {
      out.kind = JoinOutcome::Kind::Found;
      out.join = minimal.front();
      out.reason = "unique minimal upper bound inside the search box";
      return out;
    }
    std::sort(minimal.begin(), minimal.end());
    out.kind = JoinOutcome::Kind::NotUnique;
    out.minimal_upper_bounds = std::move(minimal);
    out.reason = std::to_string(out.minimal_upper_bounds.size()) +
                 " pairwise incomparable minimal upper bounds inside the search box";
    return out;
  }
  JoinOutcome try_join(const GroupElement& a, const GroupElement& b) const {
    return try_join(a, b, bound_);
  }

  // Subgroup generated by the cone (equivalently by differences of
  // cone elements), returned as a group in its own right with the
  // transported cone, plus the presentation mapping it into this one.
  SubgroupResult identity_component() const;

 private:
  std::size_t r_;
  std::vector<long long> m_;
  std::vector<GroupElement> gens_;
  std::size_t bound_;
};

struct SubgroupResult {
  OrderedAbelianGroup group;       // the identity component, abstractly
  IdentityComponent presentation;  // embed/express between it and the ambient group
};

inline SubgroupResult OrderedAbelianGroup::identity_component() const {
  IdentityComponent pres(r_, m_, gens_);
  std::vector<GroupElement> cone;
  for (const auto& g : gens_) {
    auto e = pres.express(g);
    if (!e) throw Error("cone generator " + to_string(g) + " not expressible in its own span");
    cone.push_back(*e);
  }
  return SubgroupResult{
      OrderedAbelianGroup(pres.free_rank(), pres.torsion(), std::move(cone), bound_),
      std::move(pres)};
}

// Finite sub-semilattice of the archimedean classes of the cone:
// <a> <= <b> when a is dominated by a multiple of b, <a> v <b> = <a+b>,
// bottom <0>. Only the classes reachable from a caller-supplied window
// of cone elements are materialized (the full class semilattice is
// infinite in general).
struct ArchSemilattice {
  UpperSemilattice semilattice;
  std::vector<GroupElement> classes;  // one representative per element, bottom <0> first
};

inline ArchSemilattice arch(const OrderedAbelianGroup& g, const std::vector<GroupElement>& window,
                            std::size_t bound, std::size_t class_cap = kDefaultClassCap) {
  if (window.size() > 12)
    throw SizeGuard("window of " + std::to_string(window.size()) +
                    " elements spans too many subset sums");
  for (const auto& w : window) {
    ConeDecision d = g.cone_member(w, bound);
    if (d.decision == Decision::No)
      throw NotInCone("window element " + g.to_string(w) + " is not in the cone: " + d.reason);
    if (d.decision == Decision::Inconclusive)
      throw Inconclusive("cone membership of the window element " + g.to_string(w) +
                         " is inconclusive within bound " + std::to_string(bound));
  }

  auto definite = [&](const GroupElement& a, const GroupElement& b) {
    PrincipalDecision d = g.principal_leq(a, b, bound);
    if (d.decision == Decision::Inconclusive)
      throw Inconclusive("archimedean comparison of " + g.to_string(a) + " and " +
                         g.to_string(b) + " is inconclusive within bound " +
                         std::to_string(bound));
    return d.decision == Decision::Yes;
  };
  std::vector<GroupElement> reps;
  auto classify = [&](const GroupElement& e) -> std::size_t {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (definite(e, reps[i]) && definite(reps[i], e)) return i;
    if (reps.size() >= class_cap)
      throw CapacityExceeded("archimedean class count exceeds " + std::to_string(class_cap));
    reps.push_back(e);
    return reps.size() - 1;
  };

  // Subset sums of the window; the empty sum seeds the bottom class <0>.
  for (std::size_t mask = 0; mask < (std::size_t{1} << window.size()); ++mask) {
    GroupElement sum = g.zero();
    for (std::size_t i = 0; i < window.size(); ++i)
      if (mask >> i & 1) sum = g.add(sum, window[i]);
    classify(sum);
  }

  const std::size_t n = reps.size();
  std::vector<std::string> labels;
  for (const auto& r : reps) labels.push_back("<" + detail::coords_string(r) + ">");
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j || definite(reps[i], reps[j])) rows[i].set(j);
  FinPoset poset = FinPoset::from_rows(std::move(labels), std::move(rows));
  UpperSemilattice sl = UpperSemilattice::from_poset(std::move(poset));

  // Join law <a> v <b> = <a+b>: the order-theoretic join of any two
  // classes must be the class of the sum of their representatives.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      GroupElement sum = g.add(reps[i], reps[j]);
      std::size_t k = n;
      for (std::size_t c = 0; c < n && k == n; ++c)
        if (definite(sum, reps[c]) && definite(reps[c], sum)) k = c;
      if (k == n || k != sl.join(i, j))
        throw Error("archimedean join law failed at " + g.to_string(reps[i]) + " and " +
                    g.to_string(reps[j]));
    }
  return ArchSemilattice{std::move(sl), std::move(reps)};
}

inline ArchSemilattice arch(const OrderedAbelianGroup& g,
                            const std::vector<GroupElement>& window) {
  return arch(g, window, g.default_bound());
}

}  // namespace spclat
