#include "wittlab/square_class.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "wittlab/errors.hpp"

namespace wittlab {

namespace detail {

struct TowerInfo {
  BaseKind base;
  unsigned q;
  std::vector<std::string> vars;
  int height;
  int base_classes;
  std::uint32_t base_bit;  // mask of the base bit, 0 for QuadClosed
  std::uint32_t minus_one;
  std::string descriptor;
};

}  // namespace detail

namespace {

bool is_odd_prime_power(unsigned q) {
  if (q < 3 || q % 2 == 0) return false;
  unsigned p = 3;
  while (p * p <= q && q % p != 0) p += 2;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

const detail::TowerInfo* intern(BaseKind base, unsigned q, std::vector<std::string> vars) {
  using Key = std::tuple<BaseKind, unsigned, std::vector<std::string>>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<detail::TowerInfo>> table;

  if (base != BaseKind::FiniteOdd) q = 0;
  std::lock_guard lock(mutex);
  Key key{base, q, vars};
  auto it = table.find(key);
  if (it != table.end()) return it->second.get();

  auto info = std::make_unique<detail::TowerInfo>();
  info->base = base;
  info->q = q;
  info->height = static_cast<int>(vars.size());
  info->base_classes = base == BaseKind::QuadClosed ? 1 : 2;
  info->base_bit = base == BaseKind::QuadClosed ? 0u : (1u << info->height);
  bool minus_one_nonsquare =
      base == BaseKind::RealClosed || (base == BaseKind::FiniteOdd && q % 4 == 3);
  info->minus_one = minus_one_nonsquare ? info->base_bit : 0u;

  std::string d;
  switch (base) {
    case BaseKind::FiniteOdd: d = "F" + std::to_string(q); break;
    case BaseKind::RealClosed: d = "R"; break;
    case BaseKind::QuadClosed: d = "C"; break;
  }
  if (!vars.empty()) {
    d += "[[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i) d += ',';
      d += vars[i];
    }
    d += "]]";
  }
  info->descriptor = std::move(d);
  info->vars = std::move(vars);
  auto* raw = info.get();
  table.emplace(std::move(key), std::move(info));
  return raw;
}

}  // namespace

FieldTower FieldTower::make(BaseKind base, unsigned q, std::vector<std::string> vars) {
  if (base == BaseKind::FiniteOdd && !is_odd_prime_power(q)) {
    throw ValidationError("finite base field needs an odd prime power q >= 3, got " +
                          std::to_string(q));
  }
  // 2^(k+1) classes must fit in the mask and every search assumes a small group.
  if (vars.size() > 16) throw ValidationError("tower height above 16 is not supported");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto& v = vars[i];
    if (!is_identifier(v)) throw ValidationError("invalid variable name '" + v + "'");
    if (v == "s" || v == "x" || v == "H") {
      throw ValidationError("variable name '" + v + "' is reserved");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[j] == v) throw ValidationError("duplicate variable '" + v + "'");
    }
  }
  return FieldTower(intern(base, q, std::move(vars)));
}

FieldTower FieldTower::finite_odd(unsigned q, std::vector<std::string> vars) {
  return make(BaseKind::FiniteOdd, q, std::move(vars));
}
FieldTower FieldTower::real_closed(std::vector<std::string> vars) {
  return make(BaseKind::RealClosed, 0, std::move(vars));
}
FieldTower FieldTower::quad_closed(std::vector<std::string> vars) {
  return make(BaseKind::QuadClosed, 0, std::move(vars));
}

BaseKind FieldTower::base() const { return info_->base; }
unsigned FieldTower::q() const { return info_->q; }
const std::vector<std::string>& FieldTower::vars() const { return info_->vars; }
int FieldTower::height() const { return info_->height; }
int FieldTower::base_classes() const { return info_->base_classes; }
int FieldTower::num_classes() const { return info_->base_classes << info_->height; }
bool FieldTower::minus_one_is_square() const { return info_->minus_one == 0; }
std::string FieldTower::descriptor() const { return info_->descriptor; }

FieldTower FieldTower::residue() const {
  if (info_->height == 0) throw ValidationError("tower " + descriptor() + " has no residue field");
  std::vector<std::string> vars(info_->vars.begin(), info_->vars.end() - 1);
  return FieldTower(intern(info_->base, info_->q, std::move(vars)));
}

FieldTower FieldTower::extend(std::string var) const {
  auto vars = info_->vars;
  vars.push_back(std::move(var));
  return make(info_->base, info_->q, std::move(vars));
}

int FieldTower::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < info_->vars.size(); ++i) {
    if (info_->vars[i] == name) return static_cast<int>(i) + 1;
  }
  return 0;
}

SquareClass::SquareClass(FieldTower field, std::uint32_t mask) : field_(field), mask_(mask) {
  if (mask >= static_cast<std::uint32_t>(field.num_classes())) {
    throw ValidationError("square class mask out of range for " + field.descriptor());
  }
}

SquareClass SquareClass::base_nonsquare(FieldTower field) {
  if (field.base() == BaseKind::QuadClosed) {
    throw ValidationError("quadratically closed base has no nonsquare");
  }
  return SquareClass(field, field.info_->base_bit);
}

SquareClass SquareClass::uniformizer(FieldTower field, int index) {
  if (index < 1 || index > field.height()) throw ValidationError("uniformizer index out of range");
  return SquareClass(field, 1u << (field.height() - index));
}

bool SquareClass::base_bit() const { return (mask_ & field_.info_->base_bit) != 0; }

bool SquareClass::exponent(int index) const {
  int k = field_.height();
  if (index < 1 || index > k) throw ValidationError("uniformizer index out of range");
  return ((mask_ >> (k - index)) & 1u) != 0;
}

SquareClass SquareClass::operator*(SquareClass other) const {
  if (!(field_ == other.field_)) {
    throw ValidationError("square classes over different towers: " + field_.descriptor() +
                          " vs " + other.field_.descriptor());
  }
  SquareClass r = *this;
  r.mask_ ^= other.mask_;
  return r;
}

SquareClass mul(SquareClass a, SquareClass b) { return a * b; }

SquareClass class_of_minus_one(FieldTower field) {
  return SquareClass(field, field.minus_one_is_square() ? 0u : (1u << field.height()));
}

std::vector<SquareClass> enumerate_classes(FieldTower field) {
  std::vector<SquareClass> out;
  out.reserve(field.num_classes());
  for (int m = 0; m < field.num_classes(); ++m) out.emplace_back(field, m);
  return out;
}

ClassSplit split_class(SquareClass c) {
  FieldTower residue = c.field().residue();
  return {SquareClass(residue, c.mask() >> 1), static_cast<int>(c.mask() & 1u)};
}

SquareClass lift_class(SquareClass residue_class, FieldTower field, int twist) {
  if (!(field.residue() == residue_class.field())) {
    throw ValidationError("cannot lift a class over " + residue_class.field().descriptor() +
                          " to " + field.descriptor());
  }
  return SquareClass(field, (residue_class.mask() << 1) | (twist ? 1u : 0u));
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

}  // namespace

FieldTower parse_field(std::string_view descriptor) {
  std::string s = strip(descriptor);
  if (s.empty()) throw ParseError("empty field descriptor", 1, 1);

  BaseKind base;
  unsigned q = 0;
  std::size_t pos = 1;
  switch (s[0]) {
    case 'F': {
      base = BaseKind::FiniteOdd;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) throw ParseError("expected field size after 'F'", 1, static_cast<int>(pos) + 1);
      if (pos - start > 9) throw ParseError("field size too large", 1, static_cast<int>(start) + 1);
      q = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
      break;
    }
    case 'R': base = BaseKind::RealClosed; break;
    case 'C': base = BaseKind::QuadClosed; break;
    default: throw ParseError("unknown base field '" + s.substr(0, 1) + "'", 1, 1);
  }

  std::vector<std::string> vars;
  if (pos < s.size()) {
    if (s.compare(pos, 2, "[[") != 0) {
      throw ParseError("expected '[[' after base field", 1, static_cast<int>(pos) + 1);
    }
    auto close = s.find("]]", pos + 2);
    if (close == std::string::npos || close + 2 != s.size()) {
      throw ParseError("expected ']]' at end of descriptor", 1, static_cast<int>(s.size()));
    }
    std::string inner = s.substr(pos + 2, close - pos - 2);
    std::size_t i = 0;
    while (!inner.empty() && i <= inner.size()) {
      auto comma = inner.find(',', i);
      std::string name = inner.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
      if (name.empty()) throw ParseError("empty variable name", 1, static_cast<int>(pos + 3 + i));
      vars.push_back(name);
      if (comma == std::string::npos) break;
      i = comma + 1;
    }
  }
  return FieldTower::make(base, q, std::move(vars));
}

SquareClass parse_class(std::string_view literal, FieldTower field) {
  std::string s = strip(literal);
  SquareClass c = SquareClass::one(field);
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') {
    c = c * class_of_minus_one(field);
    ++pos;
  }
  if (pos >= s.size()) throw ParseError("expected a square class factor", 1, static_cast<int>(pos) + 1);
  while (true) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '*') ++pos;
    std::string factor = s.substr(start, pos - start);
    int column = static_cast<int>(start) + 1;
    if (factor == "1") {
    } else if (factor == "s") {
      if (field.base() == BaseKind::QuadClosed) {
        throw ParseError("no nonsquare 's' over a quadratically closed base", 1, column);
      }
      c = c * SquareClass::base_nonsquare(field);
    } else if (factor.empty()) {
      throw ParseError("expected a square class factor", 1, column);
    } else if (int idx = field.var_index(factor)) {
      c = c * SquareClass::uniformizer(field, idx);
    } else {
      throw ParseError("unknown variable " + factor, 1, column);
    }
    if (pos >= s.size()) break;
    ++pos;
  }
  return c;
}

std::string format_class(SquareClass c) {
  FieldTower k = c.field();
  std::string out;
  bool sign = false;
  if (c.base_bit()) {
    if (k.base() == BaseKind::RealClosed) {
      sign = true;
    } else {
      out = "s";
    }
  }
  for (int i = 1; i <= k.height(); ++i) {
    if (!c.exponent(i)) continue;
    if (!out.empty()) out += '*';
    out += k.vars()[i - 1];
  }
  if (out.empty()) out = "1";
  return sign ? "-" + out : out;
}

}  // namespace wittlab
