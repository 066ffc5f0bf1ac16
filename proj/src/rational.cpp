#include "densops/rational.hpp"

namespace densops {

void Rat::set_ll(long long num, long long den) {
  mpz_set_si(mpq_numref(q_), num);
  mpz_set_si(mpq_denref(q_), den);
  mpq_canonicalize(q_);
}

Rat Rat::parse(std::string_view s) {
  if (s.empty()) throw DomainError("Rat: empty string");
  std::string buf(s);
  Rat r;
  if (mpq_set_str(r.q_, buf.c_str(), 10) != 0)
    throw DomainError("Rat: cannot parse '" + buf + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw DomainError("Rat: zero denominator in '" + buf + "'");
  mpq_canonicalize(r.q_);
  return r;
}

static std::string mpz_str(const mpz_t z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string out(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, out.size() + 1);
  return out;
}

std::string Rat::to_string() const {
  std::string n = mpz_str(mpq_numref(q_));
  if (is_integer()) return n;
  return n + "/" + mpz_str(mpq_denref(q_));
}

std::string Rat::num_string() const { return mpz_str(mpq_numref(q_)); }
std::string Rat::den_string() const { return mpz_str(mpq_denref(q_)); }

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im;
  if (im_.is_one())
    im = "i";
  else if (im_ == Rat(-1))
    im = "-i";
  else
    im = im_.to_string() + "*i";
  if (re_.is_zero()) return im;
  if (im_.sgn() > 0) return re_.to_string() + "+" + im;
  return re_.to_string() + im;
}

}  // namespace densops
