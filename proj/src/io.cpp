#include "spanv/io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace spanv::io {

using json = nlohmann::ordered_json;

namespace {

// A JSON value with its path, for located errors.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const { throw InputError(path_, what); }
  const std::string& path() const { return path_; }
  const json& value() const { return *j_; }

  // Rejects keys outside `allowed`; j must be an object.
  void fields(std::initializer_list<const char*> allowed) const {
    if (!j_->is_object()) fail("expected an object");
    for (const auto& [key, _] : j_->items()) {
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) fail("unknown field \"" + key + "\"");
    }
  }
  bool has(const std::string& key) const { return j_->contains(key); }
  Node at(const std::string& key) const {
    if (!j_->contains(key)) fail("missing field \"" + key + "\"");
    return Node((*j_)[key], path_ + "." + key);
  }
  std::optional<Node> opt(const std::string& key) const {
    if (!j_->contains(key)) return std::nullopt;
    return at(key);
  }
  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }
  Node operator[](std::size_t i) const { return Node((*j_)[i], path_ + "[" + std::to_string(i) + "]"); }
  std::vector<Node> items() const {
    std::vector<Node> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
    return out;
  }
  std::string string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  long integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long>();
  }
  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

 private:
  const json* j_;
  std::string path_;
};

// ---- atoms, fractions, matrices ----

Atom atom(const Node& n) {
  const json& j = n.value();
  if (j.is_string()) return Atom::of(j.get<std::string>());
  if (j.is_number_integer()) return Atom::of(static_cast<std::int64_t>(j.get<long>()));
  if (j.is_array()) {
    std::vector<Atom> parts;
    for (const auto& p : n.items()) parts.push_back(atom(p));
    return Atom::tuple(parts);
  }
  n.fail("expected an atom (string, integer or array of atoms)");
}

json to_json(Atom a) {
  if (a.is_string()) return std::string(a.text());
  if (a.is_integer()) return a.integer();
  json arr = json::array();
  for (Atom p : a.parts()) arr.push_back(to_json(p));
  return arr;
}

std::size_t lookup(const FinSet& s, const Node& n, const std::string& what) {
  Atom a = atom(n);
  auto i = s.find(a);
  if (!i) n.fail("undeclared " + what + " " + a.str());
  return *i;
}

Rational fraction(const Node& n) {
  const std::string text = n.string();
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    n.fail("malformed fraction \"" + text + "\"");
  }
}

MatrixX<Rational> raw_matrix(const Node& n) {
  const std::size_t rows = n.size();
  std::size_t cols = 0;
  if (rows > 0) cols = n[0].size();
  MatrixX<Rational> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Node row = n[r];
    if (row.size() != cols) row.fail("expected " + std::to_string(cols) + " entries like the first row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = fraction(row[c]);
  }
  return m;
}

VMorphism linear_map(const Node& n, const VObject& dom, const VObject& cod) {
  MatrixX<Rational> m = raw_matrix(n);
  const auto rows = static_cast<Eigen::Index>(cod.dim()), cols = static_cast<Eigen::Index>(dom.dim());
  // an empty matrix stands for any map with a zero-dimensional end
  if (m.rows() == 0 && (rows == 0 || cols == 0)) return VMorphism::zero(dom, cod);
  if (m.rows() != rows || m.cols() != cols)
    n.fail("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " but " + dom.str() + " -> " +
           cod.str() + " needs " + std::to_string(rows) + "x" + std::to_string(cols));
  return VMorphism(dom, cod, std::move(m));
}

json to_json(const MatrixX<Rational>& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- spaces ----

NamedSpace space(const Node& n) {
  n.fields({"name", "basis", "grouplike"});
  NamedSpace s;
  s.name = n.at("name").string();
  if (auto g = n.opt("grouplike")) s.grouplike = g->boolean();
  std::vector<BasisVector> basis;
  std::vector<Atom> labels;
  for (const auto& b : n.at("basis").items()) {
    BasisVector v;
    if (b.value().is_object()) {
      b.fields({"label", "grade"});
      v.label = atom(b.at("label"));
      if (auto g = b.opt("grade")) v.grade = static_cast<int>(g->integer());
    } else {
      v.label = atom(b);
    }
    for (Atom l : labels)
      if (l == v.label) b.fail("duplicate basis label " + v.label.str());
    if (s.grouplike && v.grade != 0) b.fail("grouplike basis vectors must have grade 0");
    labels.push_back(v.label);
    basis.push_back(v);
  }
  s.space = VObject(std::move(basis));
  return s;
}

json to_json(const NamedSpace& s) {
  json basis = json::array();
  for (const auto& b : s.space.basis()) basis.push_back(json{{"label", to_json(b.label)}, {"grade", b.grade}});
  json out{{"name", s.name}, {"basis", std::move(basis)}};
  if (s.grouplike) out["grouplike"] = true;
  return out;
}

std::vector<NamedSpace> spaces(const Node& n) {
  std::vector<NamedSpace> out;
  for (const auto& s : n.items()) {
    NamedSpace sp = space(s);
    for (const auto& o : out)
      if (o.name == sp.name) s.fail("duplicate space name \"" + sp.name + "\"");
    out.push_back(std::move(sp));
  }
  return out;
}

const NamedSpace& named(const std::vector<NamedSpace>& ss, const Node& n) {
  const std::string name = n.string();
  for (const auto& s : ss)
    if (s.name == name) return s;
  n.fail("undeclared space \"" + name + "\"");
}

// ---- keyed lists: [{"at": key, ...}, ...] with each key at most once ----

std::vector<std::optional<Node>> keyed(const Node& list, std::size_t count,
                                       const std::function<std::size_t(const Node&)>& index,
                                       std::initializer_list<const char*> fields) {
  std::vector<std::optional<Node>> out(count);
  for (const auto& e : list.items()) {
    e.fields(fields);
    std::size_t i = index(e.at("at"));
    if (out[i]) e.fail("duplicate entry");
    out[i] = e;
  }
  return out;
}

Node need(const std::optional<Node>& n, const Node& list, const std::string& key) {
  if (!n) list.fail("missing entry at " + key);
  return *n;
}

std::pair<std::size_t, std::size_t> index_pair(const FinSet& s, const Node& n, const std::string& what) {
  if (n.size() != 2) n.fail("expected a pair");
  return {lookup(s, n[0], what), lookup(s, n[1], what)};
}

// ---- comonoid data shared by both vect kinds ----

// Per morphism of the shape: F(h), its atom, and the key in the file.
struct Indexed {
  std::vector<VObject> F;
  std::vector<json> keys;
  std::function<std::size_t(const Node&)> index;
};

std::optional<ComonoidStructure> comonoid(const Node& root, const Indexed& ix, const std::vector<NamedSpace>& ss,
                                          bool& synthesized) {
  auto d = root.opt("delta");
  auto e = root.opt("epsilon");
  if (d.has_value() != e.has_value()) root.fail("give both delta and epsilon or neither");
  const std::size_t n = ix.F.size();
  ComonoidStructure c;
  if (!d) {
    // grouplike synthesis when every F(h) is a space flagged grouplike
    for (const auto& f : ix.F) {
      bool grouplike = false;
      for (const auto& s : ss) grouplike = grouplike || (s.grouplike && s.space == f);
      if (!grouplike) return std::nullopt;
    }
    for (const auto& f : ix.F) {
      const std::size_t dim = f.dim();
      c.delta.push_back(VMorphism::basis_map(
          f, tensor_obj(f, f), [dim](std::size_t j) { return j * dim + j; }, [](std::size_t) { return Rational(1); }));
      c.epsilon.push_back(VMorphism(f, VObject::unit(), MatrixX<Rational>::Ones(1, static_cast<Eigen::Index>(dim))));
    }
    synthesized = true;
    return c;
  }
  auto ds = keyed(*d, n, ix.index, {"at", "matrix"});
  auto es = keyed(*e, n, ix.index, {"at", "matrix"});
  for (std::size_t h = 0; h < n; ++h) {
    const std::string key = ix.keys[h].dump();
    c.delta.push_back(linear_map(need(ds[h], *d, key).at("matrix"), ix.F[h], tensor_obj(ix.F[h], ix.F[h])));
    c.epsilon.push_back(linear_map(need(es[h], *e, key).at("matrix"), ix.F[h], VObject::unit()));
  }
  return c;
}

std::optional<std::vector<VMorphism>> antipode(const Node& root, const Indexed& ix,
                                               const std::function<std::optional<std::size_t>(std::size_t)>& inv) {
  auto a = root.opt("antipode");
  if (!a) return std::nullopt;
  auto as = keyed(*a, ix.F.size(), ix.index, {"at", "matrix"});
  std::vector<VMorphism> out;
  for (std::size_t h = 0; h < ix.F.size(); ++h) {
    Node e = need(as[h], *a, ix.keys[h].dump());
    auto hi = inv(h);
    if (!hi) e.fail("antipode given at a non-invertible element");
    out.push_back(linear_map(e.at("matrix"), ix.F[h], ix.F[*hi]));
  }
  return out;
}

// ---- group monoids ----

GroupMonoidPresentation group_monoid(const Node& root, const std::vector<NamedSpace>& ss, bool& synthesized) {
  GroupMonoidPresentation g;
  Node m = root.at("monoid");
  m.fields({"elements", "unit", "product"});
  std::vector<Atom> els;
  for (const auto& e : m.at("elements").items()) els.push_back(atom(e));
  try {
    g.elements = FinSet(els);
  } catch (const std::exception& e) {
    m.at("elements").fail(e.what());
  }
  const std::size_t n = g.elements.size();
  if (n == 0) m.at("elements").fail("a monoid needs at least its unit");
  g.unit = lookup(g.elements, m.at("unit"), "element");
  Node prod = m.at("product");
  std::vector<std::vector<std::optional<std::size_t>>> table(n, std::vector<std::optional<std::size_t>>(n));
  for (const auto& t : prod.items()) {
    if (t.size() != 3) t.fail("expected [p, q, p·q]");
    std::size_t p = lookup(g.elements, t[0], "element"), q = lookup(g.elements, t[1], "element");
    if (table[p][q]) t.fail("duplicate product entry");
    table[p][q] = lookup(g.elements, t[2], "element");
  }
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (!table[p][q]) prod.fail("no product for (" + g.elements[p].str() + "," + g.elements[q].str() + ")");
      g.table[p][q] = *table[p][q];
    }
  try {
    monoid_category(g.elements, g.table, g.unit);
  } catch (const CategoryError& e) {
    prod.fail("not a monoid: " + e.report().summary());
  }

  Indexed ix;
  ix.index = [&](const Node& a) { return lookup(g.elements, a, "element"); };
  Node gs = root.at("g");
  auto gn = keyed(gs, n, ix.index, {"at", "space"});
  for (std::size_t p = 0; p < n; ++p) {
    ix.keys.push_back(to_json(g.elements[p]));
    g.g.push_back(named(ss, need(gn[p], gs, ix.keys[p].dump()).at("space")).space);
  }
  ix.F = g.g;

  Node mu = root.at("mu");
  auto pair_index = [&](const Node& a) {
    auto [p, q] = index_pair(g.elements, a, "element");
    return p * n + q;
  };
  auto mus = keyed(mu, n * n, pair_index, {"at", "matrix"});
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Node e = need(mus[p * n + q], mu, json::array({ix.keys[p], ix.keys[q]}).dump());
      g.mu.emplace(std::pair{p, q}, linear_map(e.at("matrix"), tensor_obj(g.g[p], g.g[q]), g.g[g.table[p][q]]));
    }
  g.eta = linear_map(root.at("eta"), VObject::unit(), g.g[g.unit]);
  g.comonoid = comonoid(root, ix, ss, synthesized);
  g.antipode = antipode(root, ix, [&](std::size_t p) -> std::optional<std::size_t> {
    for (std::size_t q = 0; q < n; ++q)
      if (g.table[p][q] == g.unit && g.table[q][p] == g.unit) return q;
    return std::nullopt;
  });
  return g;
}

// ---- enriched categories ----

EnrichedCatPresentation enriched(const Node& root, const std::vector<NamedSpace>& ss, bool& synthesized) {
  EnrichedCatPresentation e;
  std::vector<Atom> objs;
  for (const auto& o : root.at("objects").items()) objs.push_back(atom(o));
  try {
    e.objects = FinSet(objs);
  } catch (const std::exception& ex) {
    root.at("objects").fail(ex.what());
  }
  const std::size_t n = e.objects.size();
  Indexed ix;
  ix.index = [&](const Node& a) {
    auto [x, y] = index_pair(e.objects, a, "object");
    return x * n + y;
  };
  Node hom = root.at("hom");
  auto hs = keyed(hom, n * n, ix.index, {"at", "space"});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ix.keys.push_back(json::array({to_json(e.objects[x]), to_json(e.objects[y])}));
      e.a.push_back(named(ss, need(hs[x * n + y], hom, ix.keys.back().dump()).at("space")).space);
    }
  ix.F = e.a;
  auto A = [&](std::size_t x, std::size_t y) -> const VObject& { return e.a[x * n + y]; };

  Node mu = root.at("mu");
  auto triple = [&](const Node& a) {
    if (a.size() != 3) a.fail("expected a triple");
    return (lookup(e.objects, a[0], "object") * n + lookup(e.objects, a[1], "object")) * n +
           lookup(e.objects, a[2], "object");
  };
  auto mus = keyed(mu, n * n * n, triple, {"at", "matrix"});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        json key = json::array({to_json(e.objects[x]), to_json(e.objects[y]), to_json(e.objects[z])});
        Node m = need(mus[(x * n + y) * n + z], mu, key.dump());
        e.mu.emplace(std::array{x, y, z}, linear_map(m.at("matrix"), tensor_obj(A(x, y), A(y, z)), A(x, z)));
      }
  Node eta = root.at("eta");
  auto etas = keyed(eta, n, [&](const Node& a) { return lookup(e.objects, a, "object"); }, {"at", "matrix"});
  for (std::size_t x = 0; x < n; ++x)
    e.eta.push_back(linear_map(need(etas[x], eta, to_json(e.objects[x]).dump()).at("matrix"), VObject::unit(), A(x, x)));
  e.comonoid = comonoid(root, ix, ss, synthesized);
  e.antipode = antipode(root, ix, [n](std::size_t h) -> std::optional<std::size_t> { return (h % n) * n + h / n; });
  return e;
}

VectDocument vect_document(const Node& root, const std::string& kind) {
  if (kind == "group_monoid")
    root.fields({"format_version", "kind", "backend", "q", "spaces", "monoid", "g", "mu", "eta", "delta", "epsilon",
                 "antipode"});
  else
    root.fields({"format_version", "kind", "backend", "q", "spaces", "objects", "hom", "mu", "eta", "delta", "epsilon",
                 "antipode"});
  VectDocument d;
  if (auto q = root.opt("q")) {
    Rational v = fraction(*q);
    if (v.is_zero()) q->fail("braid parameter must be nonzero");
    d.q = BraidParam(v);
  }
  d.spaces = spaces(root.at("spaces"));
  if (kind == "group_monoid")
    d.presentation = group_monoid(root, d.spaces, d.comonoid_synthesized);
  else
    d.presentation = enriched(root, d.spaces, d.comonoid_synthesized);
  return d;
}

// Name of a space, registering unnamed ones as V1, V2, ...
class SpaceNames {
 public:
  explicit SpaceNames(std::vector<NamedSpace> declared) : spaces_(std::move(declared)) {}
  std::string operator()(const VObject& x) {
    for (const auto& s : spaces_)
      if (s.space == x) return s.name;
    std::string name;
    for (std::size_t i = spaces_.size() + 1;; ++i) {
      name = "V" + std::to_string(i);
      bool taken = false;
      for (const auto& s : spaces_) taken = taken || s.name == name;
      if (!taken) break;
    }
    spaces_.push_back({name, x, false});
    return name;
  }
  json to_json() const {
    json out = json::array();
    for (const auto& s : spaces_) out.push_back(io::to_json(s));
    return out;
  }

 private:
  std::vector<NamedSpace> spaces_;
};

json entry(json at, const char* key, json value) { return json{{"at", std::move(at)}, {key, std::move(value)}}; }

json to_json(const VectDocument& d) {
  json out;
  out["format_version"] = format_version;
  out["kind"] = d.is_group_monoid() ? "group_monoid" : "enriched_category";
  out["backend"] = "vect";
  out["q"] = d.q.q().str();
  SpaceNames names(d.spaces);
  json body;
  std::vector<json> keys;
  const std::optional<ComonoidStructure>* c;
  const std::optional<std::vector<VMorphism>>* s;
  if (d.is_group_monoid()) {
    const auto& g = std::get<GroupMonoidPresentation>(d.presentation);
    const std::size_t n = g.elements.size();
    json els = json::array(), prod = json::array(), gs = json::array(), mu = json::array();
    for (std::size_t p = 0; p < n; ++p) {
      keys.push_back(to_json(g.elements[p]));
      els.push_back(keys.back());
    }
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        prod.push_back(json::array({keys[p], keys[q], keys[g.table[p][q]]}));
        mu.push_back(entry(json::array({keys[p], keys[q]}), "matrix", to_json(g.mu.at({p, q}).matrix())));
      }
    for (std::size_t p = 0; p < n; ++p) gs.push_back(entry(keys[p], "space", names(g.g[p])));
    body["monoid"] = json{{"elements", els}, {"unit", keys[g.unit]}, {"product", prod}};
    body["g"] = gs;
    body["mu"] = mu;
    body["eta"] = to_json(g.eta.matrix());
    c = &g.comonoid;
    s = &g.antipode;
  } else {
    const auto& e = std::get<EnrichedCatPresentation>(d.presentation);
    const std::size_t n = e.objects.size();
    json objs = json::array(), hom = json::array(), mu = json::array(), eta = json::array();
    for (std::size_t x = 0; x < n; ++x) objs.push_back(to_json(e.objects[x]));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        keys.push_back(json::array({objs[x], objs[y]}));
        hom.push_back(entry(keys.back(), "space", names(e.a[x * n + y])));
      }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          mu.push_back(entry(json::array({objs[x], objs[y], objs[z]}), "matrix", to_json(e.mu.at({x, y, z}).matrix())));
    for (std::size_t x = 0; x < n; ++x) eta.push_back(entry(objs[x], "matrix", to_json(e.eta[x].matrix())));
    body["objects"] = objs;
    body["hom"] = hom;
    body["mu"] = mu;
    body["eta"] = eta;
    c = &e.comonoid;
    s = &e.antipode;
  }
  if (*c && !d.comonoid_synthesized) {
    json delta = json::array(), eps = json::array();
    for (std::size_t h = 0; h < keys.size(); ++h) {
      delta.push_back(entry(keys[h], "matrix", to_json((**c).delta[h].matrix())));
      eps.push_back(entry(keys[h], "matrix", to_json((**c).epsilon[h].matrix())));
    }
    body["delta"] = delta;
    body["epsilon"] = eps;
  }
  if (*s) {
    json sigma = json::array();
    for (std::size_t h = 0; h < keys.size(); ++h) sigma.push_back(entry(keys[h], "matrix", to_json((**s)[h].matrix())));
    body["antipode"] = sigma;
  }
  out["spaces"] = names.to_json();
  for (auto& [k, v] : body.items()) out[k] = v;
  return out;
}

// ---- finite categories and table polyads ----

FinCategoryPtr category(const Node& n, std::string name) {
  CategoryTables t;
  std::vector<Atom> objs, mors;
  for (const auto& o : n.at("objects").items()) objs.push_back(atom(o));
  Node ms = n.at("morphisms");
  std::vector<std::pair<Node, Node>> ends;
  for (const auto& m : ms.items()) {
    m.fields({"name", "src", "tgt"});
    mors.push_back(atom(m.at("name")));
    ends.emplace_back(m.at("src"), m.at("tgt"));
  }
  try {
    t.objects = FinSet(objs);
  } catch (const std::exception& e) {
    n.at("objects").fail(e.what());
  }
  try {
    t.morphisms = FinSet(mors);
  } catch (const std::exception& e) {
    ms.fail(e.what());
  }
  for (const auto& [s, g] : ends) {
    t.src.push_back(lookup(t.objects, s, "object"));
    t.tgt.push_back(lookup(t.objects, g, "object"));
  }
  Node ids = n.at("identities");
  std::vector<std::optional<std::size_t>> id(t.objects.size());
  for (const auto& e : ids.items()) {
    if (e.size() != 2) e.fail("expected [object, morphism]");
    std::size_t x = lookup(t.objects, e[0], "object");
    if (id[x]) e.fail("duplicate identity");
    id[x] = lookup(t.morphisms, e[1], "morphism");
  }
  for (std::size_t x = 0; x < id.size(); ++x) {
    if (!id[x]) ids.fail("no identity for " + t.objects[x].str());
    t.identities.push_back(*id[x]);
  }
  Node comp = n.at("composition");
  for (const auto& e : comp.items()) {
    if (e.size() != 3) e.fail("expected [g, f, g∘f]");
    std::size_t g = lookup(t.morphisms, e[0], "morphism"), f = lookup(t.morphisms, e[1], "morphism");
    if (!t.composition.emplace(std::pair{g, f}, lookup(t.morphisms, e[2], "morphism")).second)
      e.fail("duplicate composite");
  }
  // composites with identities may be left out
  for (std::size_t f = 0; f < t.morphisms.size(); ++f) {
    t.composition.emplace(std::pair{t.identities[t.tgt[f]], f}, f);
    t.composition.emplace(std::pair{f, t.identities[t.src[f]]}, f);
  }
  try {
    return FinCategory::make(std::move(t), std::move(name));
  } catch (const CategoryError& e) {
    n.fail("not a category: " + e.report().summary());
  }
}

json to_json(const FinCategory& c) {
  json objs = json::array(), mors = json::array(), ids = json::array(), comp = json::array();
  const auto& t = c.tables();
  for (Atom o : t.objects.elements()) objs.push_back(to_json(o));
  for (std::size_t f = 0; f < t.morphisms.size(); ++f)
    mors.push_back(json{{"name", to_json(t.morphisms[f])}, {"src", objs[t.src[f]]}, {"tgt", objs[t.tgt[f]]}});
  std::set<std::size_t> identity;
  for (std::size_t x = 0; x < t.objects.size(); ++x) {
    ids.push_back(json::array({objs[x], to_json(t.morphisms[t.identities[x]])}));
    identity.insert(t.identities[x]);
  }
  for (const auto& [gf, h] : t.composition)
    if (!identity.contains(gf.first) && !identity.contains(gf.second))
      comp.push_back(json::array({to_json(t.morphisms[gf.first]), to_json(t.morphisms[gf.second]), to_json(t.morphisms[h])}));
  return json{{"objects", objs}, {"morphisms", mors}, {"identities", ids}, {"composition", comp}};
}

const FinCategory& fin(const Category& c) { return static_cast<const FinCategory&>(*c); }

Handle object_of(const FinCategory& c, const Node& n) { return Handle::index(lookup(c.object_set(), n, "object of " + c.name())); }
Handle morphism_of(const FinCategory& c, const Node& n) {
  return Handle::index(lookup(c.morphism_set(), n, "morphism of " + c.name()));
}
json show_object(const Category& c, const Handle& h) { return to_json(fin(c).object_set()[h.as_index()]); }
json show_morphism(const Category& c, const Handle& h) { return to_json(fin(c).morphism_set()[h.as_index()]); }

// Complete lookup table over `keys`, from [[key..., value], ...].
std::map<Handle, Handle> table(const Node& list, const std::vector<Handle>& keys, std::size_t arity,
                               const std::function<Handle(const std::vector<Node>&)>& key,
                               const std::function<Handle(const Node&)>& value, const Category& shown) {
  std::map<Handle, Handle> out;
  for (const auto& e : list.items()) {
    if (e.size() != arity + 1) e.fail("expected " + std::to_string(arity + 1) + " entries");
    std::vector<Node> ks;
    for (std::size_t i = 0; i < arity; ++i) ks.push_back(e[i]);
    Handle k = key(ks);
    if (!out.emplace(k, value(e[arity])).second) e.fail("duplicate entry");
  }
  for (const auto& k : keys)
    if (!out.contains(k)) list.fail("missing entry at " + shown->show_object(k));
  return out;
}

// Components indexed by objects of `keys` (arity 1) or pairs of them (arity 2).
NatTrans components(const Node& list, const Functor& from, const Functor& to, const FinCategory& keys,
                    std::size_t arity) {
  const FinCategory& cod = fin(to.cod());
  const Category& dom = from.dom();
  auto key = [&](const std::vector<Node>& ks) {
    if (arity == 1) return object_of(keys, ks[0]);
    return Handle::pair(object_of(keys, ks[0]), object_of(keys, ks[1]));
  };
  auto m = table(list, dom->objects(), arity, key, [&](const Node& v) { return morphism_of(cod, v); }, dom);
  return NatTrans(from, to, [m](const Handle& x) { return m.at(x); });
}

TablePolyad table_polyad(const Node& root) {
  root.fields({"format_version", "kind", "backend", "target", "shape", "categories", "base", "functors", "mu", "eta",
               "opmonoidal"});
  TablePolyad out;
  PolyadPresentation& d = out.polyad;
  Node sh = root.at("shape");
  sh.fields({"objects", "morphisms", "identities", "composition"});
  d.shape = category(sh, "D");
  const FinCategory& D = *d.shape;
  auto shape_object = [&](const Node& n) { return lookup(D.object_set(), n, "shape object"); };
  auto shape_morphism = [&](const Node& n) { return lookup(D.morphism_set(), n, "shape morphism"); };

  for (const auto& c : root.at("categories").items()) {
    c.fields({"name", "objects", "morphisms", "identities", "composition"});
    std::string name = c.at("name").string();
    for (const auto& o : out.categories)
      if (o->name() == name) c.fail("duplicate category name \"" + name + "\"");
    out.categories.push_back(category(c, name));
  }
  Node base = root.at("base");
  auto bs = keyed(base, D.num_objects(), shape_object, {"at", "category"});
  for (std::size_t x = 0; x < D.num_objects(); ++x) {
    Node b = need(bs[x], base, D.object_set()[x].str()).at("category");
    const std::string name = b.string();
    FinCategoryPtr found;
    for (const auto& c : out.categories)
      if (c->name() == name) found = c;
    if (!found) b.fail("undeclared category \"" + name + "\"");
    d.base.push_back(found);
  }
  auto C = [&](std::size_t x) -> const FinCategory& { return fin(d.base[x]); };

  Node fs = root.at("functors");
  auto fn = keyed(fs, D.num_morphisms(), shape_morphism, {"at", "objects", "morphisms"});
  for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
    Node f = need(fn[h], fs, D.morphism_set()[h].str());
    const Category& dom = d.base[D.src(h)];
    const Category& cod = d.base[D.tgt(h)];
    auto one = [](const FinCategory& c, auto parse) {
      return [&c, parse](const std::vector<Node>& ks) { return parse(c, ks[0]); };
    };
    auto omap = table(f.at("objects"), dom->objects(), 1, one(C(D.src(h)), object_of),
                      [&](const Node& v) { return object_of(C(D.tgt(h)), v); }, dom);
    std::vector<Handle> mors = dom->morphisms();
    auto mmap = table(f.at("morphisms"), mors, 1, one(C(D.src(h)), morphism_of),
                      [&](const Node& v) { return morphism_of(C(D.tgt(h)), v); }, dom);
    d.F.push_back(table_functor(dom, cod, std::move(omap), std::move(mmap), "d(" + D.morphism_set()[h].str() + ")"));
  }

  Node mu = root.at("mu");
  std::map<std::pair<std::size_t, std::size_t>, Node> mus;
  for (const auto& e : mu.items()) {
    e.fields({"at", "components"});
    Node at = e.at("at");
    if (at.size() != 2) at.fail("expected a pair");
    std::size_t h = shape_morphism(at[0]), k = shape_morphism(at[1]);
    if (D.src(h) != D.tgt(k)) at.fail("not composable");
    if (!mus.emplace(std::pair{h, k}, e).second) e.fail("duplicate entry");
  }
  for (std::size_t h = 0; h < D.num_morphisms(); ++h)
    for (std::size_t k = 0; k < D.num_morphisms(); ++k) {
      if (D.src(h) != D.tgt(k)) continue;
      auto it = mus.find({h, k});
      if (it == mus.end())
        mu.fail("missing entry at (" + D.morphism_set()[h].str() + "," + D.morphism_set()[k].str() + ")");
      d.mu.emplace(std::pair{h, k}, components(it->second.at("components"), compose(d.F[h], d.F[k]),
                                               d.F[D.comp(h, k)], C(D.src(k)), 1));
    }
  Node eta = root.at("eta");
  auto es = keyed(eta, D.num_objects(), shape_object, {"at", "components"});
  for (std::size_t x = 0; x < D.num_objects(); ++x)
    d.eta.push_back(components(need(es[x], eta, D.object_set()[x].str()).at("components"),
                               Functor::identity(d.base[x]), d.F[D.id(x)], C(x), 1));

  if (auto op = root.opt("opmonoidal")) {
    op->fields({"tensor", "unit", "d2", "d0"});
    PolyadOpmonoidal o;
    Node tn = op->at("tensor");
    auto ts = keyed(tn, D.num_objects(), shape_object, {"at", "objects", "morphisms"});
    Node un = op->at("unit");
    auto us = keyed(un, D.num_objects(), shape_object, {"at", "object"});
    for (std::size_t x = 0; x < D.num_objects(); ++x) {
      const FinCategory& c = C(x);
      Category cc = product_category(d.base[x], d.base[x]);
      Node t = need(ts[x], tn, D.object_set()[x].str());
      auto pair_of = [&c](auto parse) {
        return [&c, parse](const std::vector<Node>& ks) { return Handle::pair(parse(c, ks[0]), parse(c, ks[1])); };
      };
      auto omap = table(t.at("objects"), cc->objects(), 2, pair_of(object_of),
                        [&](const Node& v) { return object_of(c, v); }, cc);
      auto mmap = table(t.at("morphisms"), cc->morphisms(), 2, pair_of(morphism_of),
                        [&](const Node& v) { return morphism_of(c, v); }, cc);
      o.monoidal.tensor.push_back(table_functor(cc, d.base[x], std::move(omap), std::move(mmap), "tensor"));
      o.monoidal.unit.push_back(
          Functor::constant(d.base[x], object_of(c, need(us[x], un, D.object_set()[x].str()).at("object"))));
    }
    Node d2 = op->at("d2");
    auto d2s = keyed(d2, D.num_morphisms(), shape_morphism, {"at", "components"});
    Node d0 = op->at("d0");
    auto d0s = keyed(d0, D.num_morphisms(), shape_morphism, {"at", "component"});
    for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
      const std::size_t s = D.src(h), t = D.tgt(h);
      const std::string key = D.morphism_set()[h].str();
      o.d2.push_back(components(need(d2s[h], d2, key).at("components"), compose(d.F[h], o.monoidal.tensor[s]),
                                compose(o.monoidal.tensor[t], product(d.F[h], d.F[h])), C(s), 2));
      Handle m = morphism_of(C(t), need(d0s[h], d0, key).at("component"));
      o.d0.push_back(NatTrans(compose(d.F[h], o.monoidal.unit[s]), o.monoidal.unit[t], [m](const Handle&) { return m; }));
    }
    out.opmonoidal = std::move(o);
  }
  return out;
}

json to_json(const TablePolyad& p) {
  const PolyadPresentation& d = p.polyad;
  const FinCategory& D = *d.shape;
  json out;
  out["format_version"] = format_version;
  out["kind"] = "polyad";
  out["backend"] = "cat";
  out["target"] = "tables";
  out["shape"] = to_json(D);
  json cats = json::array();
  for (const auto& c : p.categories) {
    json j{{"name", c->name()}};
    json tables = to_json(*c);
    for (auto& [k, v] : tables.items()) j[k] = v;
    cats.push_back(std::move(j));
  }
  out["categories"] = cats;
  auto obj = [&](std::size_t x) { return to_json(D.object_set()[x]); };
  auto mor = [&](std::size_t h) { return to_json(D.morphism_set()[h]); };
  json base = json::array();
  for (std::size_t x = 0; x < D.num_objects(); ++x) base.push_back(entry(obj(x), "category", d.base[x]->name()));
  out["base"] = base;

  json fs = json::array();
  for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
    const Functor& F = d.F[h];
    json os = json::array(), ms = json::array();
    for (const auto& a : F.dom()->objects())
      os.push_back(json::array({show_object(F.dom(), a), show_object(F.cod(), F.on_object(a))}));
    for (const auto& f : F.dom()->morphisms())
      ms.push_back(json::array({show_morphism(F.dom(), f), show_morphism(F.cod(), F.on_morphism(f))}));
    fs.push_back(json{{"at", mor(h)}, {"objects", os}, {"morphisms", ms}});
  }
  out["functors"] = fs;
  auto comps = [](const NatTrans& n) {
    json cs = json::array();
    for (const auto& a : n.from().dom()->objects())
      cs.push_back(json::array({show_object(n.from().dom(), a), show_morphism(n.to().cod(), n.at(a))}));
    return cs;
  };
  json mu = json::array();
  for (const auto& [hk, m] : d.mu) mu.push_back(entry(json::array({mor(hk.first), mor(hk.second)}), "components", comps(m)));
  out["mu"] = mu;
  json eta = json::array();
  for (std::size_t x = 0; x < D.num_objects(); ++x) eta.push_back(entry(obj(x), "components", comps(d.eta[x])));
  out["eta"] = eta;

  if (p.opmonoidal) {
    const PolyadOpmonoidal& o = *p.opmonoidal;
    json ts = json::array(), us = json::array(), d2 = json::array(), d0 = json::array();
    for (std::size_t x = 0; x < D.num_objects(); ++x) {
      const Category& c = d.base[x];
      const Functor& t = o.monoidal.tensor[x];
      json os = json::array(), ms = json::array();
      for (const auto& ab : t.dom()->objects())
        os.push_back(json::array({show_object(c, ab.first()), show_object(c, ab.second()), show_object(c, t.on_object(ab))}));
      for (const auto& fg : t.dom()->morphisms())
        ms.push_back(json::array(
            {show_morphism(c, fg.first()), show_morphism(c, fg.second()), show_morphism(c, t.on_morphism(fg))}));
      ts.push_back(json{{"at", obj(x)}, {"objects", os}, {"morphisms", ms}});
      const Functor& u = o.monoidal.unit[x];
      us.push_back(entry(obj(x), "object", show_object(c, u.on_object(u.dom()->objects().front()))));
    }
    for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
      const Category& c = d.base[D.tgt(h)];
      const Category& s = d.base[D.src(h)];
      json cs = json::array();
      const NatTrans& n = o.d2[h];
      for (const auto& ab : n.from().dom()->objects())
        cs.push_back(json::array({show_object(s, ab.first()), show_object(s, ab.second()), show_morphism(c, n.at(ab))}));
      d2.push_back(entry(mor(h), "components", cs));
      const NatTrans& z = o.d0[h];
      d0.push_back(entry(mor(h), "component", show_morphism(c, z.at(z.from().dom()->objects().front()))));
    }
    out["opmonoidal"] = json{{"tensor", ts}, {"unit", us}, {"d2", d2}, {"d0", d0}};
  }
  return out;
}

// ---- images of V-presentations ----

VectDocument vect_root(const Node& root) {
  const std::string kind = root.at("kind").string();
  if (kind != "group_monoid" && kind != "enriched_category")
    root.at("kind").fail("expected group_monoid or enriched_category");
  if (root.at("backend").string() != "vect") root.at("backend").fail(kind + " needs backend vect");
  if (root.at("format_version").integer() != format_version)
    root.at("format_version").fail("unsupported version, expected " + std::to_string(format_version));
  return vect_document(root, kind);
}

ImageDocument image_document(const Node& root) {
  root.fields({"format_version", "kind", "backend", "target", "source", "probes", "samples"});
  ImageDocument d;
  d.source = vect_root(root.at("source"));
  d.probes = spaces(root.at("probes"));
  if (d.probes.empty()) root.at("probes").fail("need at least one probe");
  for (const auto& s : root.at("samples").items()) {
    s.fields({"cell", "at", "probes", "matrix"});
    Sample x;
    x.cell = s.at("cell").string();
    for (const auto& a : s.at("at").items()) x.at.push_back(atom(a));
    for (const auto& p : s.at("probes").items()) {
      long i = p.integer();
      if (i < 0 || static_cast<std::size_t>(i) >= d.probes.size()) p.fail("no such probe");
      x.probes.push_back(static_cast<std::size_t>(i));
    }
    x.matrix = raw_matrix(s.at("matrix"));
    d.samples.push_back(std::move(x));
  }
  return d;
}

json to_json(const ImageDocument& d) {
  json out;
  out["format_version"] = format_version;
  out["kind"] = "polyad";
  out["backend"] = "cat";
  out["target"] = "vect_image";
  out["source"] = to_json(d.source);
  json probes = json::array();
  for (const auto& p : d.probes) probes.push_back(to_json(p));
  out["probes"] = probes;
  json samples = json::array();
  for (const auto& s : d.samples) {
    json at = json::array();
    for (Atom a : s.at) at.push_back(to_json(a));
    samples.push_back(json{{"cell", s.cell}, {"at", at}, {"probes", s.probes}, {"matrix", to_json(s.matrix)}});
  }
  out["samples"] = samples;
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("", std::string("not valid JSON: ") + e.what());
  }
}

// Values that fit on a line stay on one line; larger ones are indented.
void layout(const json& j, std::size_t indent, std::string& out) {
  const std::string flat = j.dump();
  if (indent + flat.size() <= 100 || !j.is_structured() || j.empty()) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  out += j.is_object() ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += json(it.key()).dump() + ": ";
    layout(*it, indent + 2, out);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_object() ? "}" : "]");
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError(file.string(), "cannot open");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

VMonad VectDocument::monad() const {
  return std::visit([](const auto& p) { return to_monad(p); }, presentation);
}

const std::optional<ComonoidStructure>& VectDocument::comonoid() const {
  return std::visit([](const auto& p) -> const std::optional<ComonoidStructure>& { return p.comonoid; }, presentation);
}

const std::optional<std::vector<VMorphism>>& VectDocument::antipode() const {
  return std::visit([](const auto& p) -> const std::optional<std::vector<VMorphism>>& { return p.antipode; },
                    presentation);
}

void VectDocument::set_antipode(std::vector<VMorphism> sigma) {
  std::visit([&](auto& p) { p.antipode = std::move(sigma); }, presentation);
}

std::vector<VObject> ImageDocument::probe_objects() const {
  std::vector<VObject> out;
  for (const auto& p : probes) out.push_back(p.space);
  return out;
}

std::string PresentationFile::kind() const {
  if (const auto* v = std::get_if<VectDocument>(&body)) return v->is_group_monoid() ? "group_monoid" : "enriched_category";
  return "polyad";
}

PresentationFile parse_presentation(const std::string& text) {
  json j = parse_json(text);
  Node root(j, "$");
  if (!j.is_object()) root.fail("expected an object");
  long version = root.at("format_version").integer();
  if (version != format_version)
    root.at("format_version").fail("unsupported version " + std::to_string(version) + ", expected " +
                                   std::to_string(format_version));
  const std::string kind = root.at("kind").string();
  const std::string backend = root.at("backend").string();
  if (kind == "group_monoid" || kind == "enriched_category") return {vect_root(root)};
  if (kind != "polyad") root.at("kind").fail("unknown kind \"" + kind + "\"");
  if (backend != "cat") root.at("backend").fail("polyad needs backend cat");
  const std::string target = root.at("target").string();
  if (target == "tables") return {table_polyad(root)};
  if (target == "vect_image") return {image_document(root)};
  root.at("target").fail("expected tables or vect_image");
}

PresentationFile read_presentation(const std::filesystem::path& file) {
  const std::string text = slurp(file);
  try {
    return parse_presentation(text);
  } catch (const InputError& e) {
    throw InputError(file.string(), e.what());
  }
}

std::string serialize(const PresentationFile& file) {
  json j = std::visit([](const auto& b) { return to_json(b); }, file.body);
  std::string out;
  layout(j, 0, out);
  return out + "\n";
}

std::vector<NamedSpace> parse_probes(const std::string& text) {
  json j = parse_json(text);
  Node root(j, "$");
  root.fields({"format_version", "probes"});
  if (root.at("format_version").integer() != format_version) root.at("format_version").fail("unsupported version");
  std::vector<NamedSpace> out = spaces(root.at("probes"));
  if (out.empty()) root.at("probes").fail("need at least one probe");
  return out;
}

std::vector<NamedSpace> read_probes(const std::filesystem::path& file) {
  const std::string text = slurp(file);
  try {
    return parse_probes(text);
  } catch (const InputError& e) {
    throw InputError(file.string(), e.what());
  }
}

std::vector<Sample> materialize(const PolyadImage& image) {
  const PolyadPresentation& d = image.polyad;
  const FinCategory& D = *d.shape;
  std::vector<VObject> probes;
  for (const auto& h : image.image.v->objects()) probes.push_back(h.as_object());
  std::vector<Sample> out;
  auto mor = [&](std::size_t h) { return D.morphism_set()[h]; };
  for (const auto& [hk, m] : d.mu)
    for (std::size_t i = 0; i < probes.size(); ++i)
      out.push_back({"mu", {mor(hk.first), mor(hk.second)}, {i}, m.at(Handle(probes[i])).as_morphism().matrix()});
  for (std::size_t x = 0; x < D.num_objects(); ++x)
    for (std::size_t i = 0; i < probes.size(); ++i)
      out.push_back({"eta", {D.object_set()[x]}, {i}, d.eta[x].at(Handle(probes[i])).as_morphism().matrix()});
  for (std::size_t h = 0; h < D.num_morphisms(); ++h) {
    const NatTrans& d2 = image.opmonoidal.d2[h];
    for (std::size_t i = 0; i < probes.size(); ++i)
      for (std::size_t j = 0; j < probes.size(); ++j)
        out.push_back({"d2", {mor(h)}, {i, j},
                       d2.at(Handle::pair(Handle(probes[i]), Handle(probes[j]))).as_morphism().matrix()});
    const NatTrans& d0 = image.opmonoidal.d0[h];
    out.push_back({"d0", {mor(h)}, {}, d0.at(d0.from().dom()->objects().front()).as_morphism().matrix()});
  }
  return out;
}

PolyadImage build_image(const ImageDocument& doc) {
  if (!doc.source.comonoid()) throw InputError("$.source", "no comonoid structure to build d2 and d0 from");
  if (doc.probes.empty()) throw InputError("$.probes", "need at least one probe");
  return polyad_from_vect(VectBackend{doc.source.q}, doc.source.monad(), *doc.source.comonoid(), doc.probe_objects());
}

ImageDocument export_image(const VectDocument& source, std::vector<NamedSpace> probes) {
  ImageDocument d{source, std::move(probes), {}};
  d.samples = materialize(build_image(d));
  return d;
}

}  // namespace spanv::io
