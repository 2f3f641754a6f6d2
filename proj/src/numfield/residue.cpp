#include "rkt/numfield/element.hpp"

namespace rkt::numfield {

ResidueStyle parse_style(const std::string& s) {
  if (s == "standard") return ResidueStyle::Standard;
  if (s == "centered") return ResidueStyle::Centered;
  fail(ErrorKind::Input, "unknown residue style '" + s + "' (expected standard or centered)");
}

const char* style_name(ResidueStyle s) { return s == ResidueStyle::Standard ? "standard" : "centered"; }

ResidueSystem residue_system(const NumberField& K, unsigned long d, ResidueStyle style) {
  require(d >= 1, ErrorKind::Input, "modulus must be positive");
  if (style == ResidueStyle::Centered)
    require(d % 2 == 1, ErrorKind::Input, "centered residue system needs an odd modulus, got " + std::to_string(d));
  std::size_t n = K.degree;
  Integer count = ipow(Integer(d), n);
  require(count <= 10000000, ErrorKind::Input, "residue system too large to enumerate: " + count.get_str() + " elements");
  long lo = style == ResidueStyle::Standard ? 0 : -static_cast<long>(d / 2);
  ResidueSystem R;
  R.modulus = d;
  R.style = style;
  std::vector<long> v(n, lo);
  for (unsigned long idx = 0; idx < count.get_ui(); ++idx) {
    R.representatives.push_back(v);
    // First coordinate varies fastest.
    for (std::size_t i = 0; i < n; ++i) {
      if (++v[i] < lo + static_cast<long>(d)) break;
      v[i] = lo;
    }
  }
  return R;
}

}  // namespace rkt::numfield
