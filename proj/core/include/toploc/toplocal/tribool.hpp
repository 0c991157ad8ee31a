#pragma once

#include <string_view>

namespace toploc {

enum class Truth { Yes, No, Unknown };

/// Three-valued answer with a CONDITIONAL marker for results resting on
/// asserted primality.
struct TriBool {
  Truth value = Truth::Unknown;
  bool conditional = false;

  static TriBool yes(bool conditional = false) { return {Truth::Yes, conditional}; }
  static TriBool no(bool conditional = false) { return {Truth::No, conditional}; }
  static TriBool unknown(bool conditional = false) { return {Truth::Unknown, conditional}; }

  bool is_yes() const noexcept { return value == Truth::Yes; }
  bool is_no() const noexcept { return value == Truth::No; }
  bool is_unknown() const noexcept { return value == Truth::Unknown; }
  bool decided() const noexcept { return value != Truth::Unknown && !conditional; }

  std::string_view name() const noexcept {
    switch (value) {
      case Truth::Yes: return "YES";
      case Truth::No: return "NO";
      case Truth::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  bool operator==(const TriBool&) const = default;
};

/// Strict conjunction: NO wins, otherwise UNKNOWN wins.
inline TriBool tri_and(TriBool a, TriBool b) {
  if (a.is_no() && b.is_no()) return TriBool::no(a.conditional && b.conditional);
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_unknown() || b.is_unknown()) return TriBool::unknown(a.conditional || b.conditional);
  return TriBool::yes(a.conditional || b.conditional);
}

/// Strict disjunction: YES wins, otherwise UNKNOWN wins.
inline TriBool tri_or(TriBool a, TriBool b) {
  if (a.is_yes() && b.is_yes()) return TriBool::yes(a.conditional && b.conditional);
  if (a.is_yes()) return a;
  if (b.is_yes()) return b;
  if (a.is_unknown() || b.is_unknown()) return TriBool::unknown(a.conditional || b.conditional);
  return TriBool::no(a.conditional || b.conditional);
}

inline TriBool tri_not(TriBool a) {
  if (a.is_yes()) return TriBool::no(a.conditional);
  if (a.is_no()) return TriBool::yes(a.conditional);
  return a;
}

}  // namespace toploc
