// Copyright 2026 The epf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "epf/poly.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace epf {

namespace {

void check_num_vars(int num_vars) {
  if (num_vars < 1 || num_vars > Poly::kMaxVars) {
    throw std::invalid_argument("Poly: number of variables must be in [1, " +
                                std::to_string(Poly::kMaxVars) + "]");
  }
}

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return static_cast<int>(r);
}

}  // namespace

Poly::Poly(int num_vars) : num_vars_(num_vars) { check_num_vars(num_vars); }

Poly Poly::constant(int num_vars, double value) {
  Poly p(num_vars);
  if (value != 0.0) p.terms_.push_back({ExpVec{}, value});
  return p;
}

Poly Poly::monomial(int num_vars, const ExpVec& exps, double coeff) {
  Poly p(num_vars);
  for (int v = num_vars; v < kMaxVars; ++v) {
    if (exps[v] != 0) throw std::invalid_argument("Poly: exponent on unused variable");
  }
  if (coeff != 0.0) p.terms_.push_back({exps, coeff});
  return p;
}

Poly Poly::monomial1(int exp, double coeff) {
  ExpVec e{};
  e[0] = static_cast<std::uint8_t>(exp);
  return monomial(1, e, coeff);
}

int Poly::total_degree() const {
  int deg = 0;
  for (const Term& t : terms_) {
    int d = std::accumulate(t.exps.begin(), t.exps.end(), 0);
    deg = std::max(deg, d);
  }
  return deg;
}

double Poly::coeff(const ExpVec& exps) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const ExpVec& e) { return t.exps < e; });
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0.0;
}

double Poly::coeff1(int exp) const {
  ExpVec e{};
  e[0] = static_cast<std::uint8_t>(exp);
  return coeff(e);
}

void Poly::add_term(const ExpVec& exps, double coeff) {
  if (coeff == 0.0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exps,
                             [](const Term& t, const ExpVec& e) { return t.exps < e; });
  if (it != terms_.end() && it->exps == exps) {
    it->coeff += coeff;
    if (it->coeff == 0.0) terms_.erase(it);
  } else {
    terms_.insert(it, {exps, coeff});
  }
}

double Poly::eval(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw std::invalid_argument("Poly::eval: point dimension mismatch");
  }
  // Power tables keep repeated exponents cheap; degrees are small.
  std::array<std::uint8_t, kMaxVars> max_exp{};
  for (const Term& t : terms_) {
    for (int v = 0; v < num_vars_; ++v) max_exp[v] = std::max(max_exp[v], t.exps[v]);
  }
  std::array<std::array<double, 256>, kMaxVars> pows;
  for (int v = 0; v < num_vars_; ++v) {
    pows[v][0] = 1.0;
    for (int e = 1; e <= max_exp[v]; ++e) pows[v][e] = pows[v][e - 1] * point[v];
  }
  double sum = 0.0;
  for (const Term& t : terms_) {
    double m = t.coeff;
    for (int v = 0; v < num_vars_; ++v) m *= pows[v][t.exps[v]];
    sum += m;
  }
  return sum;
}

double Poly::eval1(double x) const { return eval(std::span<const double>(&x, 1)); }

Poly& Poly::operator+=(const Poly& other) {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("Poly: mixed numbers of variables");
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (a->exps < b->exps) {
      merged.push_back(*a++);
    } else if (b->exps < a->exps) {
      merged.push_back(*b++);
    } else {
      const double c = a->coeff + b->coeff;
      if (c != 0.0) merged.push_back({a->exps, c});
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, terms_.end());
  merged.insert(merged.end(), b, other.terms_.end());
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator*=(double k) {
  if (k == 0.0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= k;
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.num_vars_ != b.num_vars_) {
    throw std::invalid_argument("Poly: mixed numbers of variables");
  }
  Poly out(a.num_vars_);
  std::vector<Poly::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const Poly::Term& ta : a.terms_) {
    for (const Poly::Term& tb : b.terms_) {
      Poly::ExpVec e;
      for (int v = 0; v < Poly::kMaxVars; ++v) {
        const int s = ta.exps[v] + tb.exps[v];
        if (s > 255) throw std::overflow_error("Poly: exponent overflow in product");
        e[v] = static_cast<std::uint8_t>(s);
      }
      prods.push_back({e, ta.coeff * tb.coeff});
    }
  }
  std::sort(prods.begin(), prods.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return x.exps < y.exps; });
  for (const Poly::Term& t : prods) {
    if (!out.terms_.empty() && out.terms_.back().exps == t.exps) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(t);
    }
  }
  out.normalize();
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

bool operator==(const Poly::Term& a, const Poly::Term& b) {
  return a.exps == b.exps && a.coeff == b.coeff;
}

Poly Poly::substitute_affine(double a, double b) const {
  if (num_vars_ != 1) {
    throw std::invalid_argument("Poly::substitute_affine: univariate only");
  }
  Poly out(1);
  for (const Term& t : terms_) {
    const int n = t.exps[0];
    // (a + b y)^n expanded binomially.
    std::array<double, 256> a_pows;
    a_pows[0] = 1.0;
    for (int k = 1; k <= n; ++k) a_pows[k] = a_pows[k - 1] * a;
    double bpow = 1.0;
    for (int k = 0; k <= n; ++k) {
      ExpVec e{};
      e[0] = static_cast<std::uint8_t>(k);
      out.add_term(e, t.coeff * binom(n, k) * a_pows[n - k] * bpow);
      bpow *= b;
    }
  }
  return out;
}

std::string Poly::to_string() const {
  std::string out;
  char buf[64];
  for (const Term& t : terms_) {
    std::string line;
    for (int v = 0; v < num_vars_; ++v) {
      if (v > 0) line += ' ';
      line += std::to_string(static_cast<int>(t.exps[v]));
    }
    std::snprintf(buf, sizeof(buf), "%.17g", t.coeff);
    line += " : ";
    line += buf;
    line += '\n';
    out += line;
  }
  return out;
}

void Poly::normalize() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.coeff == 0.0; }),
               terms_.end());
}

}  // namespace epf
