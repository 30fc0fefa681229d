#include "arr/field.hpp"

namespace arr {

PrimeField::Elem PrimeField::inv(Elem a) const {
  a %= p_;
  if (a < 0) a += p_;
  if (a == 0) throw DomainError("division by zero in F_p");
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p_;
  return t;
}

}  // namespace arr
