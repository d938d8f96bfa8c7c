#include "mrb/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "mrb/error.hpp"

namespace mrb {
namespace {

long g_discriminant = 0;

bool square_free(long d) {
  long m = d < 0 ? -d : d;
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw InputError("empty scalar");
  std::string t(s);
  size_t start = (t[0] == '+' || t[0] == '-') ? 1 : 0;
  if (start == t.size()) throw InputError("malformed scalar '" + t + "'");
  int slashes = 0;
  for (size_t i = start; i < t.size(); ++i) {
    if (t[i] == '/') {
      ++slashes;
      if (i == start || i + 1 == t.size()) throw InputError("malformed scalar '" + t + "'");
    } else if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
      throw InputError("malformed scalar '" + t + "'");
    }
  }
  if (slashes > 1) throw InputError("malformed scalar '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw InputError("malformed scalar '" + t + "'");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  mpq_class r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

long discriminant() { return g_discriminant; }

QuadraticSession::QuadraticSession(long d) : previous_(g_discriminant) {
  if (d == 0 || d == 1 || !square_free(d))
    throw InputError("discriminant must be square-free and not 0 or 1, got " + std::to_string(d));
  g_discriminant = d;
}

QuadraticSession::~QuadraticSession() { g_discriminant = previous_; }

Scalar::Scalar(const mpq_class& a, const mpq_class& b) : a_(a), b_(b) {
  if (sgn(b_) != 0 && g_discriminant == 0) throw InputError("surd part outside a quadratic session");
}

Scalar Scalar::root() {
  if (g_discriminant == 0) throw InputError("no quadratic session is open");
  return Scalar(mpq_class(0), mpq_class(1));
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Scalar(parse_rational(s));

  if (s.back() != ')') throw InputError("malformed scalar '" + s + "'");
  long d = std::stol(s.substr(pos + 5, s.size() - pos - 6));
  if (g_discriminant == 0 || d != g_discriminant)
    throw InputError("scalar '" + s + "' needs a quadratic session with d=" + std::to_string(d));

  // split "a+b*sqrt(d)" at the sign that starts the surd term
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  size_t split = std::string::npos;
  for (size_t i = head.size(); i-- > 1;)
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
      split = i;
      break;
    }
  std::string rat = split == std::string::npos ? "" : head.substr(0, split);
  std::string coef = split == std::string::npos ? head : head.substr(split);
  mpq_class b;
  if (coef.empty() || coef == "+") b = 1;
  else if (coef == "-") b = -1;
  else b = parse_rational(coef);
  mpq_class a = rat.empty() ? mpq_class(0) : parse_rational(rat);
  return Scalar(a, b);
}

std::string Scalar::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) out = a_.get_str();
  mpq_class mag = abs(b_);
  if (sgn(b_) < 0) out += "-";
  else if (!out.empty()) out += "+";
  if (mag != 1) out += mag.get_str() + "*";
  out += "sqrt(" + std::to_string(g_discriminant) + ")";
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (sgn(o.b_) != 0) b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (sgn(o.b_) != 0) b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  mpq_class a = a_ * o.a_ + mpq_class(g_discriminant) * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  if (sgn(b_) == 0) return Scalar(mpq_class(1) / a_);
  mpq_class norm = a_ * a_ - mpq_class(g_discriminant) * b_ * b_;
  return Scalar(a_ / norm, -b_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    if (sgn(o.a_) == 0) throw InputError("division by zero");
    a_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::optional<Scalar> Scalar::sqrt() const {
  if (sgn(b_) != 0) return std::nullopt;
  if (auto r = rational_sqrt(a_)) return Scalar(*r);
  if (g_discriminant == 0) return std::nullopt;
  if (auto r = rational_sqrt(a_ / mpq_class(g_discriminant))) return Scalar(mpq_class(0), *r);
  return std::nullopt;
}

}  // namespace mrb
