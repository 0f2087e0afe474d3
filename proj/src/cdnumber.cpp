#include "sp16/cdnumber.hpp"

#include <algorithm>
#include <sstream>

#include "sp16/errors.hpp"

namespace sp16 {

namespace {

int level_for_dimension(std::size_t n) {
  for (int level = 0; level <= kMaxLevel; ++level) {
    if (dimension(level) == n) return level;
  }
  throw LevelError("CDNumber: coordinate count " + std::to_string(n) +
                   " is not 1, 2, 4, 8 or 16");
}

void require_same_level(const CDNumber& x, const CDNumber& y, const char* op) {
  if (x.level() != y.level()) {
    throw LevelError(std::string(op) + ": level mismatch (" + std::to_string(x.level()) +
                     " vs " + std::to_string(y.level()) + ")");
  }
}

void require_level(int level) {
  if (level < 0 || level > kMaxLevel) {
    throw LevelError("CDNumber: level " + std::to_string(level) + " outside 0..4");
  }
}

}  // namespace

CDNumber::CDNumber() : coords_(1) {}

CDNumber::CDNumber(std::vector<Rational> coords)
    : level_(level_for_dimension(coords.size())), coords_(std::move(coords)) {}

CDNumber::CDNumber(int level, std::vector<Rational> coords) : level_(level), coords_(std::move(coords)) {
  require_level(level);
  if (coords_.size() != dimension(level)) {
    throw LevelError("CDNumber: level " + std::to_string(level) + " needs " +
                     std::to_string(dimension(level)) + " coordinates, got " +
                     std::to_string(coords_.size()));
  }
}

CDNumber CDNumber::zero(int level) {
  require_level(level);
  return CDNumber(level, std::vector<Rational>(dimension(level)));
}

CDNumber CDNumber::one(int level) { return real(level, Rational(1)); }

CDNumber CDNumber::real(int level, const Rational& value) {
  CDNumber x = zero(level);
  x.coords_[0] = value;
  return x;
}

CDNumber CDNumber::basis(int level, std::size_t index) {
  CDNumber x = zero(level);
  if (index >= x.dim()) throw LevelError("CDNumber::basis: index out of range");
  x.coords_[index] = Rational(1);
  return x;
}

CDNumber CDNumber::join(const CDNumber& a, const CDNumber& b) {
  require_same_level(a, b, "join");
  if (a.level() >= kMaxLevel) throw LevelError("join: result would exceed level 4");
  std::vector<Rational> coords;
  coords.reserve(2 * a.dim());
  coords.insert(coords.end(), a.coords_.begin(), a.coords_.end());
  coords.insert(coords.end(), b.coords_.begin(), b.coords_.end());
  return CDNumber(a.level() + 1, std::move(coords));
}

CDNumber CDNumber::lower() const {
  if (level_ == 0) throw LevelError("lower: level 0 has no halves");
  const auto half = static_cast<std::ptrdiff_t>(dim() / 2);
  return CDNumber(level_ - 1, std::vector<Rational>(coords_.begin(), coords_.begin() + half));
}

CDNumber CDNumber::upper() const {
  if (level_ == 0) throw LevelError("upper: level 0 has no halves");
  const auto half = static_cast<std::ptrdiff_t>(dim() / 2);
  return CDNumber(level_ - 1, std::vector<Rational>(coords_.begin() + half, coords_.end()));
}

bool CDNumber::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

bool CDNumber::is_real() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string CDNumber::to_string() const {
  std::ostringstream out;
  out << 'L' << level_ << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i != 0) out << ", ";
    out << coords_[i].to_string();
  }
  out << ']';
  return out.str();
}

std::size_t CDNumber::hash() const {
  std::size_t h = static_cast<std::size_t>(level_);
  for (const auto& c : coords_) h = h * 1000003U ^ c.hash();
  return h;
}

bool canonical_less(const CDNumber& x, const CDNumber& y) {
  if (x.level() != y.level()) return x.level() < y.level();
  const auto a = x.coords();
  const auto b = y.coords();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

CDNumber add(const CDNumber& x, const CDNumber& y) {
  require_same_level(x, y, "add");
  std::vector<Rational> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return CDNumber(x.level(), std::move(out));
}

CDNumber sub(const CDNumber& x, const CDNumber& y) {
  require_same_level(x, y, "sub");
  std::vector<Rational> out(x.coords().begin(), x.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
  return CDNumber(x.level(), std::move(out));
}

CDNumber negate(const CDNumber& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (const auto& c : x.coords()) out.push_back(-c);
  return CDNumber(x.level(), std::move(out));
}

CDNumber scale(const Rational& s, const CDNumber& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (const auto& c : x.coords()) out.push_back(s * c);
  return CDNumber(x.level(), std::move(out));
}

CDNumber conjugate(const CDNumber& x) {
  if (x.level() == 0) return x;
  return CDNumber::join(conjugate(x.lower()), negate(x.upper()));
}

Rational norm_sq(const CDNumber& x) {
  Rational sum;
  for (const auto& c : x.coords()) sum += c * c;
  return sum;
}

namespace {

// One step of the doubling product; `sub` multiplies the level n-1 halves.
template <typename SubProduct>
CDNumber doubling_step(const CDNumber& x, const CDNumber& y, SubProduct sub) {
  const CDNumber a = x.lower();
  const CDNumber b = x.upper();
  const CDNumber c = y.lower();
  const CDNumber d = y.upper();

  if (b.is_zero()) return CDNumber::join(sub(a, c), sub(conjugate(a), d));

  const CDNumber first = sub(a, c) - conjugate(sub(b, conjugate(d)));

  const CDNumber term1 = conjugate(sub(conjugate(b), conjugate(c)));
  const CDNumber innermost = conjugate(sub(conjugate(inverse(b)), conjugate(d)));
  const CDNumber middle = conjugate(sub(conjugate(a), innermost));
  const CDNumber term2 = conjugate(sub(conjugate(b), middle));

  return CDNumber::join(first, term1 + term2);
}

struct StructureConstants {
  // table[level][i * dim + j]
  std::vector<BasisProduct> table[kMaxLevel];
};

const StructureConstants& structure_constants() {
  static const StructureConstants constants = [] {
    StructureConstants out;
    for (int level = 0; level < kMaxLevel; ++level) {
      const std::size_t n = dimension(level);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          const CDNumber p = mul_conway_smith_reference(CDNumber::basis(level, i), CDNumber::basis(level, j));
          std::size_t hits = 0;
          BasisProduct bp{0, 0};
          for (std::size_t k = 0; k < n; ++k) {
            if (p[k].is_zero()) continue;
            ++hits;
            if (p[k] == Rational(1)) {
              bp = {1, k};
            } else if (p[k] == Rational(-1)) {
              bp = {-1, k};
            } else {
              hits = 2;
            }
          }
          if (hits != 1) throw Error("structure constants: basis product is not a signed basis unit");
          out.table[level].push_back(bp);
        }
      }
    }
    return out;
  }();
  return constants;
}

CDNumber mul_by_table(const CDNumber& x, const CDNumber& y) {
  const int level = x.level();
  const std::size_t n = x.dim();
  const auto& table = structure_constants().table[level];
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const BasisProduct& bp = table[i * n + j];
      if (bp.sign > 0) {
        out[bp.index] += x[i] * y[j];
      } else {
        out[bp.index] -= x[i] * y[j];
      }
    }
  }
  return CDNumber(level, std::move(out));
}

}  // namespace

CDNumber mul_conway_smith_reference(const CDNumber& x, const CDNumber& y) {
  require_same_level(x, y, "mul_conway_smith_reference");
  if (x.level() == 0) return CDNumber(0, {x[0] * y[0]});
  return doubling_step(x, y, mul_conway_smith_reference);
}

BasisProduct basis_product(int level, std::size_t i, std::size_t j) {
  if (level < 0 || level >= kMaxLevel) throw LevelError("basis_product: level must be 0..3");
  const std::size_t n = dimension(level);
  if (i >= n || j >= n) throw LevelError("basis_product: index out of range");
  return structure_constants().table[level][i * n + j];
}

CDNumber mul_conway_smith(const CDNumber& x, const CDNumber& y) {
  require_same_level(x, y, "mul_conway_smith");
  if (x.level() < kMaxLevel) return mul_by_table(x, y);
  return doubling_step(x, y, mul_by_table);
}

CDNumber mul_16on_simplified(const CDNumber& x, const CDNumber& y) {
  require_same_level(x, y, "mul_16on_simplified");
  if (x.level() != kMaxLevel) throw LevelError("mul_16on_simplified: operands must be 16-ons");

  const CDNumber a = x.lower();
  const CDNumber b = x.upper();
  const CDNumber c = y.lower();
  const CDNumber d = y.upper();
  const auto mul = mul_conway_smith;

  if (b.is_zero()) return CDNumber::join(mul(a, c), mul(conjugate(a), d));

  const CDNumber first = mul(a, c) - mul(d, conjugate(b));
  const CDNumber second = mul(c, b) + mul(mul(conjugate(a), inverse(b)), mul(b, d));
  return CDNumber::join(first, second);
}

CDNumber inverse(const CDNumber& x) {
  const Rational n = norm_sq(x);
  if (n.is_zero()) throw ZeroElementError("inverse: zero has no inverse");
  return scale(Rational(1) / n, conjugate(x));
}

bool is_niner(const CDNumber& x) {
  if (x.level() != kMaxLevel) throw LevelError("is_niner: niners are 16-ons (level 4)");
  const auto c = x.coords();
  return std::all_of(c.begin() + kNinerSupport, c.end(), [](const Rational& v) { return v.is_zero(); });
}

namespace {

template <typename Range>
SignClass classify(const Range& values) {
  bool pos = false;
  bool neg = false;
  for (const Rational* v : values) {
    const int s = v->sign();
    if (s == 0) return SignClass::HasZeroCoord;
    (s > 0 ? pos : neg) = true;
  }
  if (pos && neg) return SignClass::Mixed;
  return neg ? SignClass::AllNegative : SignClass::AllPositive;
}

}  // namespace

SignClass sign_class(const CDNumber& x) {
  std::vector<const Rational*> values;
  for (const auto& c : x.coords()) values.push_back(&c);
  return classify(values);
}

SignClass sign_class_on(const CDNumber& x, std::span<const std::size_t> support) {
  std::vector<const Rational*> values;
  for (std::size_t i : support) {
    if (i >= x.dim()) throw LevelError("sign_class_on: support index out of range");
    values.push_back(&x[i]);
  }
  if (values.empty()) return SignClass::HasZeroCoord;
  return classify(values);
}

bool same_privileged_orthant(const CDNumber& x, const CDNumber& y) {
  const SignClass a = sign_class(x);
  return (a == SignClass::AllPositive || a == SignClass::AllNegative) && a == sign_class(y);
}

CDNumber embed(const CDNumber& x, int target_level) {
  require_level(target_level);
  if (target_level < x.level()) {
    throw LevelError("embed: target level " + std::to_string(target_level) + " below source level " +
                     std::to_string(x.level()));
  }
  std::vector<Rational> coords(x.coords().begin(), x.coords().end());
  coords.resize(dimension(target_level));
  return CDNumber(target_level, std::move(coords));
}

const char* to_string(SignClass c) {
  switch (c) {
    case SignClass::AllPositive: return "AllPositive";
    case SignClass::AllNegative: return "AllNegative";
    case SignClass::Mixed: return "Mixed";
    case SignClass::HasZeroCoord: return "HasZeroCoord";
  }
  return "?";
}

}  // namespace sp16
