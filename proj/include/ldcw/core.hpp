#pragma once
// Core abstractions: finite categories with interned objects/morphisms,
// law reports with counterexample witnesses, and path-based equation checking.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldcw {

// ---------------------------------------------------------------------------
// Handles. Objects and morphisms are ids interned by their owning engine;
// equality of morphisms is id equality because engines intern canonical forms.
// ---------------------------------------------------------------------------

struct Obj {
  int32_t id = -1;
  bool valid() const { return id >= 0; }
  friend bool operator==(Obj a, Obj b) { return a.id == b.id; }
  friend bool operator!=(Obj a, Obj b) { return a.id != b.id; }
  friend bool operator<(Obj a, Obj b) { return a.id < b.id; }
};

struct Mor {
  int32_t id = -1;
  bool valid() const { return id >= 0; }
  friend bool operator==(Mor a, Mor b) { return a.id == b.id; }
  friend bool operator!=(Mor a, Mor b) { return a.id != b.id; }
  friend bool operator<(Mor a, Mor b) { return a.id < b.id; }
};

// ---------------------------------------------------------------------------
// Errors.
// ---------------------------------------------------------------------------

// Malformed input (files, invalid lattices, unknown ids, bad parameters).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration budget was exceeded.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal inconsistency: a cross-check that can only fail if the library
// itself (not the instance under test) is wrong.
struct HardFailure : std::logic_error {
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Category interface. Composition is diagrammatic: compose(f, g) = f;g,
// defined exactly when cod(f) = dom(g). Engines must throw HardFailure on
// non-composable arguments (catches diagram transcription bugs loudly).
// ---------------------------------------------------------------------------

class Category {
 public:
  virtual ~Category() = default;

  virtual int num_objects() const = 0;
  virtual Obj dom(Mor f) const = 0;
  virtual Obj cod(Mor f) const = 0;
  virtual Mor identity(Obj a) const = 0;
  virtual Mor compose(Mor f, Mor g) const = 0;  // f;g
  // Complete, duplicate-free, deterministically ordered hom-set.
  virtual std::vector<Mor> hom(Obj a, Obj b) const = 0;
  virtual std::string obj_name(Obj a) const = 0;
  virtual std::string mor_name(Mor f) const = 0;
  // Two-sided inverse of f, if any. The default scans hom(cod f, dom f);
  // engines with large hom-sets override it with structural inversion.
  virtual std::optional<Mor> find_inverse(Mor f) const;

  bool eq(Mor f, Mor g) const { return f == g; }
  bool is_identity(Mor f) const { return f == identity(dom(f)); }
  std::vector<Obj> objects() const;
  Mor compose_all(std::initializer_list<Mor> fs) const;

 protected:
  void require_composable(Mor f, Mor g) const;
};

using CatPtr = std::shared_ptr<const Category>;

// ---------------------------------------------------------------------------
// Law reports.
// ---------------------------------------------------------------------------

enum class Status { Pass, Fail, Skipped };

struct Witness {
  std::vector<std::string> objects;     // indexing object tuple
  std::vector<std::string> lhs_path;    // leg labels, diagrammatic order
  std::vector<std::string> rhs_path;
  std::string lhs_mor, rhs_mor;         // engine names of the two composites
};

struct LawReport {
  std::string law_id;
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::string note;
  long checked = 0;  // number of tuples verified
};

bool all_pass(const std::vector<LawReport>& reports);
std::string status_name(Status s);
// First failing report, if any.
const LawReport* first_failure(const std::vector<LawReport>& reports);
void append_reports(std::vector<LawReport>& into,
                    const std::vector<LawReport>& more);

// ---------------------------------------------------------------------------
// Path: a labelled composite, used for both evaluation and witness text.
// ---------------------------------------------------------------------------

class Path {
 public:
  explicit Path(const Category& C) : cat_(&C) {}
  Path& step(const std::string& label, Mor m);
  Mor value() const;  // throws HardFailure if empty
  bool empty() const { return !value_.valid(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  const Category* cat_;
  Mor value_{};
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// LawChecker: accumulates one report per law id, in registration order,
// recording the first counterexample witness.
// ---------------------------------------------------------------------------

class LawChecker {
 public:
  explicit LawChecker(const Category& C) : cat_(&C) {}

  // Compare two labelled composites at the given index tuple.
  bool check(const std::string& law_id, const std::vector<Obj>& index,
             const Path& lhs, const Path& rhs);
  // Compare two morphisms with short descriptions.
  bool check_eq(const std::string& law_id, const std::vector<Obj>& index,
                Mor lhs, const std::string& lhs_desc, Mor rhs,
                const std::string& rhs_desc);
  // Record a boolean verdict (for property checks without an equation shape).
  bool check_that(const std::string& law_id, const std::vector<Obj>& index,
                  bool ok, const std::string& lhs_desc,
                  const std::string& rhs_desc);
  void skip(const std::string& law_id, const std::string& note);
  void note(const std::string& law_id, const std::string& note);

  const std::vector<LawReport>& reports() const { return reports_; }
  std::vector<LawReport> take() { return std::move(reports_); }
  bool all_pass() const { return ldcw::all_pass(reports_); }

 private:
  LawReport& slot(const std::string& law_id);
  const Category* cat_;
  std::vector<LawReport> reports_;
  std::map<std::string, size_t> index_;
};

// ---------------------------------------------------------------------------
// Morphism families (object-indexed), memoized. Memoization is idempotent:
// re-resolution always yields the same morphism.
// ---------------------------------------------------------------------------

using Fam1 = std::function<Mor(Obj)>;
using Fam2 = std::function<Mor(Obj, Obj)>;
using Fam3 = std::function<Mor(Obj, Obj, Obj)>;
using Fam4 = std::function<Mor(Obj, Obj, Obj, Obj)>;

Fam1 memo_fam(Fam1 f);
Fam2 memo_fam(Fam2 f);
Fam3 memo_fam(Fam3 f);
Fam4 memo_fam(Fam4 f);

// Uniformly strided sample of at most cap elements (first element kept);
// used by quadruple-indexed suites beyond the default object bound.
std::vector<Obj> strided_sample(const std::vector<Obj>& objs, size_t cap);

// Default bounds for enumeration-heavy checks.
struct Bounds {
  size_t quad_objects = 12;      // object cap for quadruple-indexed laws
  long max_assoc_triples = 2000000;  // associativity budget in validate
  long max_hom = 1 << 20;        // largest hom-set an engine will enumerate
};

}  // namespace ldcw
