#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spanv {

namespace detail {
struct AtomNode;
}

// Interned value: a string, an integer, or a tuple of atoms. Equality is
// pointer identity on the interned node.
class Atom {
 public:
  Atom();  // the empty tuple ()

  static Atom of(std::string_view text);
  static Atom of(std::int64_t value);
  static Atom of(const char* text) { return of(std::string_view(text)); }
  static Atom tuple(std::span<const Atom> parts);
  static Atom pair(Atom first, Atom second);

  bool is_string() const;
  bool is_integer() const;
  bool is_tuple() const;
  std::string_view text() const;
  std::int64_t integer() const;
  std::span<const Atom> parts() const;
  Atom first() const;
  Atom second() const;

  std::string str() const;
  std::size_t hash() const { return std::hash<const void*>{}(node_); }

  friend bool operator==(Atom a, Atom b) { return a.node_ == b.node_; }

 private:
  explicit Atom(const detail::AtomNode* n) : node_(n) {}
  const detail::AtomNode* node_;
};

// Concatenates the tuple parts of a and b (non-tuples count as one part).
// A single resulting part is returned unwrapped.
Atom flatten_concat(Atom a, Atom b);

}  // namespace spanv

template <>
struct std::hash<spanv::Atom> {
  std::size_t operator()(spanv::Atom a) const noexcept { return a.hash(); }
};
