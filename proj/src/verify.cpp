#include "braidswitch/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "braidswitch/laurent.hpp"
#include "braidswitch/unitary_numerics.hpp"

namespace braidswitch {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  GeneratorPair squier = GeneratorPair::of(Representation::squier);
  if (opts.flip_beta2_sign) squier.second(1, 0) = -squier.second(1, 0);
  const GeneratorPair reduced = GeneratorPair::of(Representation::reduced);
  const LaurentMatrix form = squier_form();

  std::vector<CheckResult> out;
  out.push_back({"braid relation (reduced Burau)", check_braid_relation(reduced), ""});
  out.push_back({"braid relation (Squier)", check_braid_relation(squier), ""});
  out.push_back({"J-unitarity beta_i^* J beta_i = J", check_j_unitarity(squier, form), ""});
  out.push_back({"similarity psi_i = D^-1 beta_i D", check_similarity(squier, reduced), ""});

  const BraidWord w = parse_braid_word("1 2 1");
  const LaurentMatrix beta_w = evaluate_word(w, squier);
  for (double omega : opts.spot_omegas) {
    const SpecializedForm f = squier_form_at(omega);
    const std::string at = fmt(" at omega=%.3g", omega);
    out.push_back({"J(omega) positive definite" + at, f.positive_definite,
                   fmt("lambda+=%.3g lambda-=%.3g", f.lambda_plus, f.lambda_minus)});

    double j_err = 0.0;
    for (const LaurentMatrix* g : {&squier.first, &squier.second}) {
      const Mat2 b = specialize_matrix(*g, omega);
      j_err = std::max(j_err, max_abs_diff(b.adjoint() * f.j * b, f.j));
    }
    out.push_back({"numeric J-unitarity" + at, j_err <= kIdentityTol, fmt("residual=%.3g", j_err)});

    if (f.positive_definite) {
      const double u_err = unitarity_error(unitarize(beta_w, omega));
      out.push_back({"Euclidean unitarity of U(1 2 1)" + at, u_err <= kIdentityTol, fmt("error=%.3g", u_err)});
    }
  }
  return out;
}

bool print_checks(std::ostream& out, const std::vector<CheckResult>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
    all = all && c.passed;
  }
  return all;
}

}  // namespace braidswitch
