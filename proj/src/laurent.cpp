#include "braidswitch/laurent.hpp"

#include <stdexcept>

namespace braidswitch {

namespace {

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit of Z[s,s^-1]: " + str());
  const auto& [e, c] = *terms_.begin();
  return monomial(-e, c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p;
  return p -= a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      p.add_term(ea + eb, checked_mul(ca, cb));
    }
  }
  return p;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest power first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Coeff mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "s";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentMatrix::det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

LaurentMatrix LaurentMatrix::star() const {
  return {e_[0].involute(), e_[2].involute(), e_[1].involute(), e_[3].involute()};
}

LaurentMatrix LaurentMatrix::inverse() const {
  const LaurentPoly d = det().unit_inverse();
  return {d * e_[3], d * -e_[1], d * -e_[2], d * e_[0]};
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    }
  }
  return m;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

LaurentMatrix operator*(const LaurentPoly& k, const LaurentMatrix& m) {
  return {k * m(0, 0), k * m(0, 1), k * m(1, 0), k * m(1, 1)};
}

std::string LaurentMatrix::str() const {
  return "((" + e_[0].str() + ", " + e_[1].str() + "), (" + e_[2].str() + ", " + e_[3].str() + "))";
}

LaurentMatrix burau_generator(int index, Representation rep, int sign) {
  const BraidGenerator g(index, sign);
  return burau_generator(g, rep);
}

LaurentMatrix burau_generator(const BraidGenerator& g, Representation rep) {
  const LaurentPoly s = LaurentPoly::monomial(1);
  const LaurentPoly neg_t = LaurentPoly::monomial(2, -1);
  // Reduced Burau uses t = s^2 in the off-diagonal slot; Squier uses s.
  const LaurentPoly off = rep == Representation::reduced ? LaurentPoly::monomial(2) : s;
  LaurentMatrix m;
  if (g.index() == 1) {
    m = rep == Representation::reduced ? LaurentMatrix{neg_t, 1, 0, 1} : LaurentMatrix{neg_t, off, 0, 1};
  } else {
    m = LaurentMatrix{1, 0, off, neg_t};
  }
  return g.sign() > 0 ? m : m.inverse();
}

LaurentMatrix evaluate_word(const BraidWord& w, Representation rep) {
  LaurentMatrix m = LaurentMatrix::identity();
  for (const auto& g : w) m = m * burau_generator(g, rep);
  return m;
}

LaurentMatrix evaluate_word(const BraidWord& w, const GeneratorPair& gens) {
  LaurentMatrix m = LaurentMatrix::identity();
  for (const auto& g : w) {
    const LaurentMatrix& base = g.index() == 1 ? gens.first : gens.second;
    m = m * (g.sign() > 0 ? base : base.inverse());
  }
  return m;
}

LaurentMatrix squier_form() {
  const LaurentPoly diag = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
  return {diag, -1, -1, diag};
}

LaurentMatrix similarity_diagonal() { return {1, 0, 0, LaurentPoly::monomial(-1)}; }

bool check_braid_relation(const GeneratorPair& gens) {
  const auto& a = gens.first;
  const auto& b = gens.second;
  return a * b * a == b * a * b;
}

bool check_j_unitarity(const GeneratorPair& squier, const LaurentMatrix& form) {
  for (const auto* g : {&squier.first, &squier.second}) {
    if (g->star() * form * *g != form) return false;
  }
  return true;
}

bool check_similarity(const GeneratorPair& squier, const GeneratorPair& reduced) {
  const LaurentMatrix d = similarity_diagonal();
  const LaurentMatrix d_inv = d.inverse();
  const LaurentMatrix form = d.star() * squier_form() * d;
  const std::array<std::pair<const LaurentMatrix*, const LaurentMatrix*>, 2> pairs{
      std::pair{&squier.first, &reduced.first}, std::pair{&squier.second, &reduced.second}};
  for (const auto& [beta, psi] : pairs) {
    if (d_inv * *beta * d != *psi) return false;
    if (psi->star() * form * *psi != form) return false;
  }
  return true;
}

}  // namespace braidswitch
