#include "toric/hypersurface.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace toric {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& s, std::size_t nvars) : s_(s), nvars_(nvars) {}

  std::vector<Term> parse() {
    std::map<IntVec, Integer> acc;
    skip();
    if (pos_ == s_.size()) return {};
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Term t = term();
      acc[t.exponent] += sign * t.coefficient;
      skip();
    }
    std::vector<Term> out;
    for (auto& [e, c] : acc)
      if (c != 0) out.push_back({c, e});
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial: " + what + " at position " + std::to_string(pos_));
  }
  Integer number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }
  Term term() {
    Term t{1, IntVec(nvars_, Integer(0))};
    bool any = false;
    for (;;) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coefficient *= number();
      } else if (peek() == 'S') {
        ++pos_;
        const Integer idx = number();
        if (idx < 1 || idx > nvars_) fail("variable out of range");
        Integer power = 1;
        skip();
        if (peek() == '^') {
          ++pos_;
          skip();
          power = number();
        }
        t.exponent[static_cast<std::size_t>(idx) - 1] += power;
      } else {
        fail("expected a factor");
      }
      any = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return t;
  }

  const std::string& s_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

void enumerate(const IntMat& Q, const IntVec& w, const std::vector<Integer>& hi, IntVec& e,
               std::size_t k, std::vector<IntVec>& out) {
  if (k == e.size()) {
    if (Q * e == w) out.push_back(e);
    return;
  }
  for (Integer x = 0; x <= hi[k]; ++x) {
    e[k] = x;
    enumerate(Q, w, hi, e, k + 1, out);
  }
  e[k] = 0;
}

}  // namespace

std::vector<Term> parse_polynomial(const std::string& text, std::size_t nvars) {
  return PolyParser(text, nvars).parse();
}

std::string format_polynomial(const std::vector<Term>& terms, const std::vector<std::string>& vars) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const Term& term = terms[t];
    const bool neg = term.coefficient < 0;
    const Integer c = neg ? Integer(-term.coefficient) : term.coefficient;
    if (t == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::vector<std::string> factors;
    if (c != 1) factors.push_back(c.str());
    for (std::size_t i = 0; i < term.exponent.size(); ++i) {
      if (term.exponent[i] == 0) continue;
      std::string f = vars.at(i);
      if (term.exponent[i] != 1) f += "^" + term.exponent[i].str();
      factors.push_back(f);
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) out += (k ? "*" : "") + factors[k];
  }
  return out;
}

std::vector<IntVec> riemann_roch_points(const Fan& fan, const IntVec& w) {
  const CoxData cox = cox_data(fan);
  if (w.size() != cox.Q.rows()) throw std::invalid_argument("class has wrong length");
  const auto bounds = nonneg_fiber_bounds(cox.Q, w);
  if (!bounds) throw InfiniteFiber();
  if (bounds->empty()) return {};
  std::vector<IntVec> out;
  IntVec e(fan.num_rays(), Integer(0));
  enumerate(cox.Q, w, *bounds, e, 0, out);
  return out;
}

std::optional<IntVec> is_liftable(const DeformationData& d, const IntVec& e) {
  const auto ker = kernel_basis(d.nu);
  if (ker.size() != 1) throw std::logic_error("nu should have a rank one kernel");
  try {
    return solve_nonneg_line(d.nu, e, ker[0]);
  } catch (const NoRationalSolution&) {
    return std::nullopt;
  }
}

LiftResult lift_polynomial(const LiftProblem& p) {
  const DeformationData& d = *p.deformation;
  LiftResult res;
  for (std::size_t k = 0; k < p.monomials.size(); ++k) {
    const Term& t = p.monomials[k];
    if (d.cox.Q * t.exponent != p.w)
      throw std::invalid_argument("monomial " + std::to_string(k) + " is not of class " +
                                  to_string(p.w));
    res.preimages.push_back(is_liftable(d, t.exponent));
    if (!res.preimages.back() && !res.first_failure) res.first_failure = k;
  }
  if (res.liftable())
    for (std::size_t k = 0; k < p.monomials.size(); ++k) {
      IntVec x{Integer(0)};
      x.insert(x.end(), res.preimages[k]->begin(), res.preimages[k]->end());
      res.lifted.push_back({p.monomials[k].coefficient, std::move(x)});
    }
  return res;
}

HilbertReport hilbert_basis_check(const DeformationData& d) {
  const std::size_t c2 = *d.column_of(2, d.triple.rho), c3 = *d.column_of(3, d.triple.rho);
  auto without = [&](std::size_t drop) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < d.nu.cols(); ++k)
      if (k != drop) keep.push_back(k);
    const IntMat M = d.nu.select_columns(keep);
    return M.rows() == M.cols() ? determinant(M) : Integer(0);
  };
  HilbertReport rep;
  rep.det_without_2rho = without(c2);
  rep.det_without_3rho = without(c3);
  rep.passed = abs(rep.det_without_2rho) == 1 && abs(rep.det_without_3rho) == 1;
  return rep;
}

}  // namespace toric
