#include "spanv/atom.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <variant>

namespace spanv {

namespace detail {

struct AtomNode {
  std::variant<std::string, std::int64_t, std::vector<Atom>> value;
};

namespace {

using Key = std::variant<std::string, std::int64_t, std::vector<const AtomNode*>>;

struct Pool {
  std::mutex lock;
  std::map<Key, const AtomNode*> nodes;
};

Pool& pool() {
  static Pool* p = new Pool;  // never destroyed: atoms outlive static teardown
  return *p;
}

}  // namespace
}  // namespace detail

namespace {

const detail::AtomNode* intern(detail::Key key, std::variant<std::string, std::int64_t, std::vector<Atom>> value) {
  auto& p = detail::pool();
  std::lock_guard guard(p.lock);
  auto it = p.nodes.find(key);
  if (it != p.nodes.end()) return it->second;
  auto* node = new detail::AtomNode{std::move(value)};
  p.nodes.emplace(std::move(key), node);
  return node;
}

}  // namespace

Atom::Atom() : Atom(tuple({})) {}

Atom Atom::of(std::string_view text) {
  std::string s(text);
  return Atom(intern(detail::Key(s), s));
}

Atom Atom::of(std::int64_t value) { return Atom(intern(detail::Key(value), value)); }

Atom Atom::tuple(std::span<const Atom> parts) {
  std::vector<const detail::AtomNode*> key;
  key.reserve(parts.size());
  for (const Atom& a : parts) key.push_back(a.node_);
  return Atom(intern(detail::Key(std::move(key)), std::vector<Atom>(parts.begin(), parts.end())));
}

Atom Atom::pair(Atom first, Atom second) {
  const Atom parts[2] = {first, second};
  return tuple(parts);
}

bool Atom::is_string() const { return node_->value.index() == 0; }
bool Atom::is_integer() const { return node_->value.index() == 1; }
bool Atom::is_tuple() const { return node_->value.index() == 2; }

std::string_view Atom::text() const {
  if (!is_string()) throw std::logic_error("atom is not a string: " + str());
  return std::get<0>(node_->value);
}

std::int64_t Atom::integer() const {
  if (!is_integer()) throw std::logic_error("atom is not an integer: " + str());
  return std::get<1>(node_->value);
}

std::span<const Atom> Atom::parts() const {
  if (!is_tuple()) throw std::logic_error("atom is not a tuple: " + str());
  return std::get<2>(node_->value);
}

Atom Atom::first() const {
  auto p = parts();
  if (p.size() != 2) throw std::logic_error("atom is not a pair: " + str());
  return p[0];
}

Atom Atom::second() const {
  auto p = parts();
  if (p.size() != 2) throw std::logic_error("atom is not a pair: " + str());
  return p[1];
}

std::string Atom::str() const {
  switch (node_->value.index()) {
    case 0:
      return std::get<0>(node_->value);
    case 1:
      return std::to_string(std::get<1>(node_->value));
    default: {
      std::string out = "(";
      bool first = true;
      for (const Atom& a : std::get<2>(node_->value)) {
        if (!first) out += ",";
        first = false;
        out += a.str();
      }
      return out + ")";
    }
  }
}

Atom flatten_concat(Atom a, Atom b) {
  std::vector<Atom> parts;
  auto push = [&](Atom x) {
    if (x.is_tuple()) {
      for (Atom p : x.parts()) parts.push_back(p);
    } else {
      parts.push_back(x);
    }
  };
  push(a);
  push(b);
  if (parts.size() == 1) return parts.front();
  return Atom::tuple(parts);
}

}  // namespace spanv
