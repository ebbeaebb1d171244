#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "refl/repr/irrep.hpp"

namespace refl {

// Generator letter of U_q(sl2): E, F, or a Cartan element acting by fn(h) on weight h.
template <class S>
struct Letter {
  enum class Kind { E, F, Cartan };
  Kind kind = Kind::Cartan;
  std::function<S(int)> fn;
};

// Finite linear combination of words in E, F and Cartan letters. Products
// concatenate words; no normal ordering is attempted.
template <class S>
class AlgebraElement {
 public:
  struct Term {
    S coeff;
    std::vector<Letter<S>> word;
  };

  AlgebraElement() = default;

  static AlgebraElement scalar(S c) {
    AlgebraElement a;
    if (!is_zero(c)) a.terms_.push_back({std::move(c), {}});
    return a;
  }
  static AlgebraElement letter(Letter<S> l) {
    AlgebraElement a;
    a.terms_.push_back({S(1), {std::move(l)}});
    return a;
  }
  static AlgebraElement E() { return letter({Letter<S>::Kind::E, {}}); }
  static AlgebraElement F() { return letter({Letter<S>::Kind::F, {}}); }
  static AlgebraElement cartan(std::function<S(int)> fn) { return letter({Letter<S>::Kind::Cartan, std::move(fn)}); }

  const std::vector<Term>& terms() const { return terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) { return *this += -o; }
  AlgebraElement& operator*=(const S& c) {
    if (is_zero(c)) terms_.clear();
    for (auto& t : terms_) t.coeff *= c;
    return *this;
  }
  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const S& c) { return a *= c; }
  friend AlgebraElement operator*(const S& c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) {
        Term t{x.coeff * y.coeff, x.word};
        t.word.insert(t.word.end(), y.word.begin(), y.word.end());
        r.terms_.push_back(std::move(t));
      }
    return r;
  }

 private:
  std::vector<Term> terms_;
};

template <class S>
Matrix<S> evaluate(const AlgebraElement<S>& a, const Irrep<S>& rep) {
  Matrix<S> r(static_cast<std::size_t>(rep.dim));
  for (const auto& t : a.terms()) {
    Matrix<S> w = Matrix<S>::identity(static_cast<std::size_t>(rep.dim));
    for (const auto& l : t.word) {
      switch (l.kind) {
        case Letter<S>::Kind::E: w = w * rep.E; break;
        case Letter<S>::Kind::F: w = w * rep.F; break;
        case Letter<S>::Kind::Cartan: w = w * weight_diagonal(rep, l.fn); break;
      }
    }
    r += w * t.coeff;
  }
  return r;
}

// q^{xi H} as a Cartan letter.
template <class Field>
AlgebraElement<typename Field::Scalar> q_cartan(const Field& f, HalfInt xi) {
  return AlgebraElement<typename Field::Scalar>::cartan([f, xi](int h) { return f.v_power(xi.twice * h); });
}

// x^{c H} as a Cartan letter.
template <class S>
AlgebraElement<S> spectral_cartan_element(const Spectral<S>& x, int c) {
  return AlgebraElement<S>::cartan([x, c](int h) { return x.pow(c * h).value(); });
}

enum class Involution { sigma, iota };

// sigma: automorphism E <-> F, H -> -H.
// iota: anti-automorphism E -> q^{-H-1} F, F -> E q^{H+1}, H -> H.
template <class Field>
AlgebraElement<typename Field::Scalar> apply_map(const Field& f, Involution map,
                                                 const AlgebraElement<typename Field::Scalar>& a) {
  using S = typename Field::Scalar;
  using Kind = typename Letter<S>::Kind;
  AlgebraElement<S> r;
  for (const auto& t : a.terms()) {
    AlgebraElement<S> img = AlgebraElement<S>::scalar(t.coeff);
    if (map == Involution::sigma) {
      for (const auto& l : t.word) {
        if (l.kind == Kind::E) img = img * AlgebraElement<S>::F();
        else if (l.kind == Kind::F) img = img * AlgebraElement<S>::E();
        else img = img * AlgebraElement<S>::cartan([fn = l.fn](int h) { return fn(-h); });
      }
    } else {
      for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
        if (it->kind == Kind::E) {
          img = img * AlgebraElement<S>::cartan([f](int h) { return f.q_power(-h - 1); }) * AlgebraElement<S>::F();
        } else if (it->kind == Kind::F) {
          img = img * AlgebraElement<S>::E() * AlgebraElement<S>::cartan([f](int h) { return f.q_power(h + 1); });
        } else {
          img = img * AlgebraElement<S>::letter(*it);
        }
      }
    }
    r += img;
  }
  return r;
}

// Casimir FE + (q^{H+1} + q^{-H-1}) / (q - q^{-1})^2 as an element.
template <class Field>
AlgebraElement<typename Field::Scalar> casimir_element(const Field& f) {
  using S = typename Field::Scalar;
  const S lam2 = ipow(f.q_power(1) - f.q_power(-1), 2);
  return AlgebraElement<S>::F() * AlgebraElement<S>::E() +
         AlgebraElement<S>::cartan([f, lam2](int h) { return (f.q_power(h + 1) + f.q_power(-h - 1)) / lam2; });
}

}  // namespace refl
