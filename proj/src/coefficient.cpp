#include "k3lambda/coefficient.hpp"

#include <sstream>

namespace k3 {

namespace {
// degrees (k,p) of the five extension slots, in slot order
constexpr int kdeg_of[5] = {1, 0, 2, 1, 0};
constexpr int pdeg_of[5] = {0, 1, 0, 1, 2};

int slot_of(int kdeg, int pdeg) {
  if (kdeg == 1 && pdeg == 0) return Coefficient::K;
  if (kdeg == 0 && pdeg == 1) return Coefficient::P;
  if (kdeg == 2 && pdeg == 0) return Coefficient::KK;
  if (kdeg == 1 && pdeg == 1) return Coefficient::KP;
  if (kdeg == 0 && pdeg == 2) return Coefficient::PP;
  return -1;
}
} // namespace

Rat Coefficient::part(int kdeg, int pdeg) const {
  if (kdeg == 0 && pdeg == 0) return rat_;
  int s = slot_of(kdeg, pdeg);
  if (s < 0) throw std::domain_error("symbol degree above 2");
  return ext_ ? (*ext_)[s] : Rat(0);
}

void Coefficient::set_part(int kdeg, int pdeg, const Rat& v) {
  if (kdeg == 0 && pdeg == 0) {
    rat_ = v;
  } else {
    int s = slot_of(kdeg, pdeg);
    if (s < 0) throw std::domain_error("symbol degree above 2");
    ext()[s] = v;
  }
  normalize();
}

void Coefficient::normalize() {
  if (!ext_) return;
  for (const Rat& r : *ext_)
    if (r != 0) return;
  ext_.reset();
}

bool Coefficient::operator==(const Coefficient& o) const {
  if (rat_ != o.rat_) return false;
  if (!ext_ && !o.ext_) return true;
  for (int s = 0; s < 5; ++s)
    if (part(kdeg_of[s], pdeg_of[s]) != o.part(kdeg_of[s], pdeg_of[s])) return false;
  return true;
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  rat_ += o.rat_;
  if (o.ext_) {
    Ext& e = ext();
    for (int s = 0; s < 5; ++s) e[s] += (*o.ext_)[s];
  }
  normalize();
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  rat_ -= o.rat_;
  if (o.ext_) {
    Ext& e = ext();
    for (int s = 0; s < 5; ++s) e[s] -= (*o.ext_)[s];
  }
  normalize();
  return *this;
}

Coefficient Coefficient::operator-() const {
  Coefficient out;
  out.rat_ = -rat_;
  if (ext_) {
    out.ext_ = std::make_unique<Ext>();
    for (int s = 0; s < 5; ++s) (*out.ext_)[s] = -(*ext_)[s];
  }
  return out;
}

Coefficient& Coefficient::operator*=(const Rat& r) {
  rat_ *= r;
  if (ext_) {
    for (Rat& x : *ext_) x *= r;
    normalize();
  }
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (!a.ext_ && !b.ext_) return Coefficient(a.rat_ * b.rat_);
  Coefficient out;
  for (int ka = 0; ka <= 2; ++ka)
    for (int pa = 0; pa + ka <= 2; ++pa) {
      Rat ca = a.part(ka, pa);
      if (ca == 0) continue;
      for (int kb = 0; kb <= 2; ++kb)
        for (int pb = 0; pb + kb <= 2; ++pb) {
          Rat cb = b.part(kb, pb);
          if (cb == 0) continue;
          int kd = ka + kb, pd = pa + pb;
          if (kd + pd > 2)
            throw std::domain_error("coefficient product exceeds symbol degree 2");
          out.set_part(kd, pd, out.part(kd, pd) + ca * cb);
        }
    }
  return out;
}

std::string Coefficient::str() const {
  static const char* names[5] = {"k", "p", "kk", "kp", "pp"};
  std::ostringstream os;
  bool first = true;
  if (rat_ != 0 || !ext_) {
    os << rat_.get_str();
    first = false;
  }
  if (ext_)
    for (int s = 0; s < 5; ++s) {
      const Rat& c = (*ext_)[s];
      if (c == 0) continue;
      if (!first) os << (c > 0 ? "+" : "");
      os << c.get_str() << "*" << names[s];
      first = false;
    }
  return os.str();
}

} // namespace k3
