#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spanv/hopf.hpp"
#include "spanv/polyad.hpp"

// Presentation files: JSON documents with a format_version, a kind and a
// backend. See README for the schema. Parsing is strict: unknown fields,
// undeclared atoms, malformed fractions and mis-sized matrices are errors
// that name the offending path.
namespace spanv::io {

inline constexpr int format_version = 1;

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what) {}
};

struct NamedSpace {
  std::string name;
  VObject space;
  bool grouplike = false;
};

// group_monoid and enriched_category, backend vect.
struct VectDocument {
  BraidParam q;
  std::vector<NamedSpace> spaces;
  std::variant<GroupMonoidPresentation, EnrichedCatPresentation> presentation;
  // δ, ε were omitted and rebuilt from grouplike bases
  bool comonoid_synthesized = false;

  bool is_group_monoid() const { return presentation.index() == 0; }
  VMonad monad() const;
  const std::optional<ComonoidStructure>& comonoid() const;
  const std::optional<std::vector<VMorphism>>& antipode() const;
  void set_antipode(std::vector<VMorphism> sigma);
};

// kind polyad, target tables: finite categories given by their tables.
struct TablePolyad {
  std::vector<FinCategoryPtr> categories;
  PolyadPresentation polyad;
  std::optional<PolyadOpmonoidal> opmonoidal;
};

// One materialized component of the V → Cat image at probe objects.
struct Sample {
  std::string cell;  // mu, eta, d2 or d0
  std::vector<Atom> at;
  std::vector<std::size_t> probes;
  MatrixX<Rational> matrix;
};

// kind polyad, target vect_image: the image of a V-presentation, evaluated
// at the probes.
struct ImageDocument {
  VectDocument source;
  std::vector<NamedSpace> probes;
  std::vector<Sample> samples;

  std::vector<VObject> probe_objects() const;
};

using Body = std::variant<VectDocument, TablePolyad, ImageDocument>;

struct PresentationFile {
  Body body;
  std::string kind() const;
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile read_presentation(const std::filesystem::path& file);
std::string serialize(const PresentationFile& file);

// {"format_version": 1, "probes": [space, ...]}; at least one probe.
std::vector<NamedSpace> parse_probes(const std::string& text);
std::vector<NamedSpace> read_probes(const std::filesystem::path& file);

// Components of μ, η, d0 at every probe and of d2 at every pair of probes.
std::vector<Sample> materialize(const PolyadImage& image);
ImageDocument export_image(const VectDocument& source, std::vector<NamedSpace> probes);
PolyadImage build_image(const ImageDocument& doc);

}  // namespace spanv::io
