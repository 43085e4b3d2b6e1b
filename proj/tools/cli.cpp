#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "spanv/functoriality.hpp"
#include "spanv/io.hpp"
#include "spanv/monoidale.hpp"

namespace spanv::cli {

using json = nlohmann::ordered_json;

namespace {

enum class Check { monad, opmonoidal, hopf, antipode, duoidal, frobenius };
constexpr Check all_checks[] = {Check::monad, Check::opmonoidal, Check::hopf,
                                Check::antipode, Check::duoidal, Check::frobenius};

const char* name(Check c) {
  switch (c) {
    case Check::monad: return "monad";
    case Check::opmonoidal: return "opmonoidal";
    case Check::hopf: return "hopf";
    case Check::antipode: return "antipode";
    case Check::duoidal: return "duoidal";
    case Check::frobenius: return "frobenius";
  }
  return "";
}

std::vector<Check> prerequisites(Check c) {
  switch (c) {
    case Check::opmonoidal: return {Check::monad};
    case Check::hopf: return {Check::monad, Check::opmonoidal};
    case Check::antipode: return {Check::monad, Check::opmonoidal, Check::hopf};
    case Check::duoidal: return {Check::monad, Check::opmonoidal};
    default: return {};
  }
}

struct Outcome {
  Check check;
  Report report;
  json extra = json::object();
  double seconds = 0;
};

struct Options {
  std::string format = "text";
  unsigned seed = 1;
};

json atom_json(Atom a) {
  if (a.is_string()) return std::string(a.text());
  if (a.is_integer()) return a.integer();
  json arr = json::array();
  for (Atom p : a.parts()) arr.push_back(atom_json(p));
  return arr;
}

json matrix_json(const VMorphism& f) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < f.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < f.matrix().cols(); ++c) row.push_back(f(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json determinants(const std::vector<FusionDeterminant>& ds) {
  json out = json::array();
  for (const auto& d : ds)
    out.push_back(json{{"at", atom_json(d.at)}, {"value", d.value ? json(d.value->str()) : json(nullptr)}});
  return out;
}

// ---- one checker per (kind, check) ----

class Checker {
 public:
  virtual ~Checker() = default;
  virtual Outcome run(Check c) = 0;
};

class VectChecker final : public Checker {
 public:
  VectChecker(const io::VectDocument& doc, const Options& opt)
      : doc_(doc), opt_(opt), bk_{doc.q}, p_(doc.monad()) {}

  Outcome run(Check c) override {
    Outcome o{c, Report(name(c))};
    switch (c) {
      case Check::monad:
        o.report = check_monad(bk_, p_);
        break;
      case Check::opmonoidal:
        if (!comonoid(o.report)) break;
        o.report = check_opmonoidal(bk_, p_, *doc_.comonoid());
        if (doc_.comonoid_synthesized) o.report.note("comonoid", "synthesized from grouplike bases");
        break;
      case Check::hopf: {
        if (!comonoid(o.report)) break;
        HopfResult h = is_hopf(bk_, p_, *doc_.comonoid());
        o.report.count(h.left.size() + h.right.size());
        if (!h.verdict.hopf) o.report.fail("fusion", h.verdict.witness);
        if (h.groupoid_witness) o.report.fail("groupoid", *h.groupoid_witness);
        o.extra["determinants"] = json{{"left", determinants(h.left)}, {"right", determinants(h.right)}};
        break;
      }
      case Check::antipode:
        antipode(o);
        break;
      case Check::duoidal:
        duoidal(o.report);
        break;
      case Check::frobenius:
        frobenius(o.report);
        break;
    }
    return o;
  }

  // Ignore the antipode in the file and solve for it instead.
  void recompute_antipode() { fresh_ = true; }
  const std::vector<VMorphism>& sigma() const { return sigma_; }

 private:
  void antipode(Outcome& o) {
    if (!comonoid(o.report)) return;
    const ComonoidStructure& c = *doc_.comonoid();
    std::vector<VMorphism> sigma;
    if (doc_.antipode() && !fresh_) {
      sigma = *doc_.antipode();
      o.report.note("source", "file");
    } else {
      AntipodeResult s = compute_antipode(p_, c);
      if (!s.sigma) {
        o.report.fail("antipode", "no solution: " + s.witness);
        return;
      }
      sigma = *s.sigma;
      o.report.note("source", "computed");
    }
    Report componentwise = check_antipode(p_, c, sigma);
    io::VectDocument with = doc_;
    with.set_antipode(sigma);
    Report presentation = std::visit(
        [](const auto& p) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, GroupMonoidPresentation>)
            return check_antipode_group(p);
          else
            return check_antipode_enriched(p);
        },
        with.presentation);
    Report cells = check_antipode_duoidal(bk_, p_, c, sigma);
    o.report.note("componentwise", to_string(componentwise.status()));
    o.report.note("presentation", to_string(presentation.status()));
    o.report.note("2-cells", to_string(cells.status()));
    o.report.absorb(componentwise);
    o.report.absorb(cells);
    if (presentation.status() != componentwise.status())
      o.report.fail("agreement", "presentation check disagrees with the componentwise check");
    const FinCategory& D = *p_.shape;
    json s = json::array();
    for (std::size_t h = 0; h < sigma.size(); ++h)
      s.push_back(json{{"at", atom_json(D.morphism_set()[h])}, {"matrix", matrix_json(sigma[h])}});
    o.extra["antipode"] = s;
    sigma_ = std::move(sigma);
  }

  bool comonoid(Report& r) const {
    if (doc_.comonoid()) return true;
    r.fail("input", "no comultiplication given; flag the spaces grouplike or give delta and epsilon");
    return false;
  }

  // The duoidal axioms at random 6-tuples drawn from F (with its comonoid
  // labels), I and J.
  void duoidal(Report& r) {
    if (!comonoid(r)) return;
    VMonadCells t = monad_cells(bk_, p_);
    ComonoidLabeledCell f = comonoid_cell(t, *doc_.comonoid());
    r.absorb(check_comonoid_cell(f));
    DuoidalUnits u = duoidal_units(bk_, t.base);
    const std::vector<VCell1> pool{f.cell, u.I, u.J};
    std::mt19937 rng(opt_.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const int samples = 3;
    for (int i = 0; i < samples; ++i) {
      std::vector<VCell1> six;
      for (int k = 0; k < 6; ++k) six.push_back(pool[pick(rng)]);
      r.absorb(check_duoidal_at(bk_, u, six));
    }
    r.note("seed", std::to_string(opt_.seed));
    r.note("samples", std::to_string(samples));
  }

  void frobenius(Report& r) {
    MonoidaleData mon = induced_monoidale(bk_, p_.shape->object_set());
    r.absorb(check_monoidale(bk_, mon));
    OpmapAdjunctions adj = opmap_adjunctions(bk_, mon);
    r.absorb(check_adjunction(bk_, adj.m_star, mon.m, adj.m_unit, adj.m_counit, "m* -| m"));
    r.absorb(check_adjunction(bk_, adj.u_star, mon.u, adj.u_unit, adj.u_counit, "u* -| u"));
    r.absorb(check_frobenius(bk_, mon, adj));
  }

  const io::VectDocument& doc_;
  Options opt_;
  VectBackend bk_;
  VMonad p_;
  std::vector<VMorphism> sigma_;
  bool fresh_ = false;
};

Outcome not_for_polyads(Check c) {
  Outcome o{c, Report(name(c))};
  o.report.skip("not defined for polyads");
  return o;
}

class TableChecker final : public Checker {
 public:
  explicit TableChecker(const io::TablePolyad& doc) : doc_(doc) {}

  Outcome run(Check c) override {
    Outcome o{c, Report(name(c))};
    switch (c) {
      case Check::monad:
        o.report = check_polyad(doc_.polyad);
        break;
      case Check::opmonoidal:
        if (!doc_.opmonoidal) {
          o.report.fail("input", "no opmonoidal structure given");
          break;
        }
        o.report = check_polyad_opmonoidal(doc_.polyad, *doc_.opmonoidal);
        break;
      case Check::hopf:
        if (!doc_.opmonoidal) {
          o.report.fail("input", "no opmonoidal structure given");
          break;
        }
        hopf(o.report, polyad_is_hopf(doc_.polyad, *doc_.opmonoidal));
        break;
      default:
        return not_for_polyads(c);
    }
    return o;
  }

  static void hopf(Report& r, const HopfVerdict& v) {
    r.count();
    if (!v.hopf) r.fail(v.witness.rfind("shape", 0) == 0 ? "groupoid" : "fusion", v.witness);
  }

 private:
  const io::TablePolyad& doc_;
};

class ImageChecker final : public Checker {
 public:
  explicit ImageChecker(const io::ImageDocument& doc) : doc_(doc), image_(io::build_image(doc)) {}

  Outcome run(Check c) override {
    Outcome o{c, Report(name(c))};
    switch (c) {
      case Check::monad: {
        o.report.absorb(check_vect_to_cat(image_.image, doc_.probe_objects(), {}));
        o.report.absorb(check_polyad(image_.polyad));
        samples(o.report);
        break;
      }
      case Check::opmonoidal:
        o.report = check_polyad_opmonoidal(image_.polyad, image_.opmonoidal);
        break;
      case Check::hopf:
        TableChecker::hopf(o.report, polyad_is_hopf(image_.polyad, image_.opmonoidal));
        break;
      default:
        return not_for_polyads(c);
    }
    return o;
  }

 private:
  // The stored components must be the ones the image computes.
  void samples(Report& r) const {
    std::vector<io::Sample> fresh = io::materialize(image_);
    if (fresh.size() != doc_.samples.size()) {
      r.fail("samples", "expected " + std::to_string(fresh.size()) + " samples, found " +
                            std::to_string(doc_.samples.size()));
      return;
    }
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      const io::Sample& a = fresh[i];
      const io::Sample& b = doc_.samples[i];
      std::string where = "sample " + std::to_string(i) + " (" + a.cell + ")";
      if (a.cell != b.cell || a.at != b.at || a.probes != b.probes)
        r.fail(where, "expected a different cell, position or probe list");
      else if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols() || a.matrix != b.matrix)
        r.fail(where, "component differs from the image");
    }
    r.count(fresh.size());
  }

  const io::ImageDocument& doc_;
  PolyadImage image_;
};

// ---- reporting ----

void print(const std::string& command, const std::string& file, const std::string& kind,
           const std::vector<Outcome>& outcomes, bool ok, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    json checks = json::array();
    for (const auto& o : outcomes) {
      json w = json::array();
      for (const auto& x : o.report.witnesses()) w.push_back(json{{"where", x.where}, {"what", x.what}});
      json d = json::object();
      for (const auto& [k, v] : o.report.details()) d[k] = v;
      json c{{"name", name(o.check)},
             {"status", to_string(o.report.status())},
             {"checked", o.report.checked()},
             {"details", d},
             {"witnesses", w}};
      for (auto& [k, v] : o.extra.items()) c[k] = v;
      checks.push_back(std::move(c));
    }
    json r{{"format_version", io::format_version}, {"command", command}, {"file", file},
           {"kind", kind},                         {"status", ok ? "pass" : "fail"}, {"checks", checks}};
    out << r.dump(2) << "\n";
    return;
  }
  out << file << " (" << kind << ")\n";
  for (const auto& o : outcomes) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-11s %-8s %6zu checked  %8.3f s\n", name(o.check),
                  to_string(o.report.status()), o.report.checked(), o.seconds);
    out << line;
    for (const auto& [k, v] : o.report.details()) out << "      " << k << ": " << v << "\n";
    for (const auto& w : o.report.witnesses()) out << "      " << (w.where.empty() ? "" : w.where + ": ") << w.what << "\n";
    if (o.extra.contains("determinants"))
      for (const char* side : {"left", "right"}) {
        out << "      " << side << " fusion determinants:";
        for (const auto& d : o.extra["determinants"][side])
          out << " " << d["at"].dump() << "=" << (d["value"].is_null() ? "non-square" : d["value"].get<std::string>());
        out << "\n";
      }
    if (o.extra.contains("antipode"))
      for (const auto& s : o.extra["antipode"]) out << "      sigma " << s["at"].dump() << " = " << s["matrix"].dump() << "\n";
  }
  out << (ok ? "pass" : "fail") << "\n";
}

// Runs the selected checks and their prerequisites in dependency order;
// a check whose prerequisite did not pass is skipped.
std::vector<Outcome> pipeline(Checker& checker, const std::vector<Check>& selected) {
  std::vector<bool> wanted(std::size(all_checks), false);
  for (Check c : selected) {
    wanted[static_cast<int>(c)] = true;
    for (Check p : prerequisites(c)) wanted[static_cast<int>(p)] = true;
  }
  std::vector<Outcome> out;
  for (Check c : all_checks) {
    if (!wanted[static_cast<int>(c)]) continue;
    std::optional<std::string> blocked;
    for (Check p : prerequisites(c))
      for (const auto& o : out)
        if (o.check == p && o.report.status() != Status::pass && !blocked) blocked = name(p);
    if (blocked) {
      Outcome o{c, Report(name(c))};
      o.report.skip(*blocked + " did not pass");
      out.push_back(std::move(o));
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    Outcome o = checker.run(c);
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(o));
  }
  return out;
}

bool all_pass(const std::vector<Outcome>& outcomes, const std::vector<Check>& selected) {
  for (const auto& o : outcomes) {
    bool chosen = false;
    for (Check c : selected) chosen = chosen || c == o.check;
    // skipped checks fail the run only when they were asked for and a
    // prerequisite failed; checks that do not apply to the kind pass
    if (o.report.status() == Status::fail) return false;
    if (o.report.status() == Status::skipped && chosen && o.report.witnesses().front().what != "not defined for polyads")
      return false;
  }
  return true;
}

std::unique_ptr<Checker> checker_for(const io::PresentationFile& f, const Options& opt) {
  if (const auto* v = std::get_if<io::VectDocument>(&f.body)) return std::make_unique<VectChecker>(*v, opt);
  if (const auto* t = std::get_if<io::TablePolyad>(&f.body)) return std::make_unique<TableChecker>(*t);
  return std::make_unique<ImageChecker>(std::get<io::ImageDocument>(f.body));
}

void write(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw io::InputError(path, "cannot write");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks monads, opmonoidal structure, Hopf conditions and antipodes in Span|V and Span|Cat", "spanv"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", opt.seed, "seed for randomized property samples");

  std::string file, probes, output;
  bool flags[std::size(all_checks)] = {};
  CLI::App* check = app.add_subcommand("check", "run checks on a presentation file");
  check->add_option("file", file, "presentation file")->required();
  for (Check c : all_checks)
    check->add_flag(std::string("--") + name(c), flags[static_cast<int>(c)], std::string("run the ") + name(c) + " check");

  CLI::App* exp = app.add_subcommand("export-polyad", "write the V -> Cat image of a presentation as a polyad file");
  exp->add_option("file", file, "group_monoid or enriched_category file")->required();
  exp->add_option("--probes", probes, "probe spaces")->required();
  exp->add_option("-o,--output", output, "output file (default stdout)");

  CLI::App* anti = app.add_subcommand("antipode", "solve for the antipode of a Hopf presentation");
  anti->add_option("file", file, "group_monoid or enriched_category file")->required();
  anti->add_option("-o,--output", output, "write the presentation with the antipode filled in");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? pass : input_error;
  }

  try {
    io::PresentationFile doc = io::read_presentation(file);
    if (*exp) {
      const auto* v = std::get_if<io::VectDocument>(&doc.body);
      if (!v) throw io::InputError(file, "export-polyad needs a group_monoid or enriched_category file");
      io::ImageDocument image = io::export_image(*v, io::read_probes(probes));
      write(output, io::serialize({image}), out);
      return pass;
    }
    if (*anti) {
      auto* v = std::get_if<io::VectDocument>(&doc.body);
      if (!v) throw io::InputError(file, "antipode needs a group_monoid or enriched_category file");
      VectChecker c(*v, opt);
      c.recompute_antipode();
      std::vector<Check> selected{Check::antipode};
      auto outcomes = pipeline(c, selected);
      const bool ok = all_pass(outcomes, selected);
      print("antipode", file, doc.kind(), outcomes, ok, opt, out);
      if (ok && !output.empty()) {
        io::VectDocument with = *v;
        with.set_antipode(c.sigma());
        write(output, io::serialize({with}), out);
      }
      return ok ? pass : check_failure;
    }
    std::vector<Check> selected;
    for (Check c : all_checks)
      if (flags[static_cast<int>(c)]) selected.push_back(c);
    if (selected.empty()) selected = {Check::monad, Check::opmonoidal, Check::hopf, Check::antipode};
    auto checker = checker_for(doc, opt);
    auto outcomes = pipeline(*checker, selected);
    const bool ok = all_pass(outcomes, selected);
    print("check", file, doc.kind(), outcomes, ok, opt, out);
    return ok ? pass : check_failure;
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    // boundary and dimension errors raised while assembling cells
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace spanv::cli
