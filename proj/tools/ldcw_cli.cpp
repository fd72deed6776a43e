// Batch front-end: load or construct instances, run law suites, classify,
// build derived categories, and compare instances along a functor file.
//
// Exit codes: 0 = all pass, 1 = law failure, 2 = input error,
//             3 = enumeration budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ldcw/serialize.hpp"
#include "ldcw/zoo.hpp"

using namespace ldcw;

namespace {

struct Options {
  std::string builtin, file;
  std::string second_builtin, second_file;
  std::string functor_file;
  std::string output = "text";
  std::string out_path;
  int max_size = 2;
  int bound = 12;
  int parallelism = 1;
  long seed = 0;
};

// A resolved instance: always a category with a bounded object list; the
// richer layers (SLDC, certified CLDC, distributive SMC) are present when
// the source construction provides them.
struct Instance {
  std::string desc;
  CatPtr C;
  std::vector<Obj> objs;
  std::optional<ldc::LdcStructure> L;
  std::optional<cldc::CldcStructure> X;
  std::optional<construct::DistributiveSmcWithZero> smc;
  std::optional<limits::ChosenProducts> prods;
  std::optional<limits::ChosenCoproducts> cops;
  std::vector<LawReport> assembly;  // reports from building/certifying
  std::string failure;              // nonempty when certification failed
  // When the construction certifies that no CLDC structure can exist (the
  // Kleisli not-a-CLDC certificate), the witness text lives here.
  std::string not_cldc;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad integer parameter \"" + s + "\" in " + what);
  }
}

cldc::CldcOptions make_options(const Options& o) {
  cldc::CldcOptions opt;
  opt.base.bounds.quad_objects = (size_t)o.bound;
  return opt;
}

void adopt_cldc(Instance& inst, cldc::AssembleResult&& res,
                const cldc::CldcOptions& opt) {
  append_reports(inst.assembly, res.reports);
  inst.failure = res.failure;
  if (res.cldc) {
    inst.X = std::move(res.cldc);
    if (!inst.X->mix) cldc::cldc_mix(*inst.X, &inst.assembly, opt);
    inst.L = inst.X->L;
  }
}

Instance make_builtin(const std::string& spec, const Options& o) {
  auto opt = make_options(o);
  auto parts = split(spec, ':');
  if (parts.empty()) throw InputError("empty builtin spec");
  Instance inst;
  inst.desc = spec;
  const std::string& kind = parts[0];

  if (kind == "bdl") {
    if (parts.size() != 3) {
      throw InputError("builtin bdl: expected bdl:<chain|boolean|divisors>:<n>");
    }
    int n = parse_int(parts[2], spec);
    construct::FiniteBDL lat;
    if (parts[1] == "chain") lat = zoo::bdl_chain(n);
    else if (parts[1] == "boolean") lat = zoo::bdl_boolean(n);
    else if (parts[1] == "divisors") lat = zoo::bdl_divisors(n);
    else throw InputError("unknown lattice family \"" + parts[1] + "\"");
    auto res = construct::bdl_to_cldc(lat, opt);
    append_reports(inst.assembly, res.reports);
    inst.failure = res.failure;
    if (res.X) {
      inst.X = std::move(res.X);
      inst.C = inst.X->C;
      inst.objs = inst.X->objs;
      inst.L = inst.X->L;
    }
    return inst;
  }
  if (kind == "finset") {
    auto B = zoo::make_finset(o.max_size);
    inst.C = B.C;
    inst.objs = B.objs;
    inst.prods = B.prods;
    inst.cops = B.cops;
    return inst;
  }
  if (kind == "finpar") {
    auto D = zoo::finpar_direct_ldc(o.max_size);
    inst.C = D.base.C;
    inst.objs = D.base.objs;
    inst.L = D.L;
    inst.smc = D.base.smc;
    inst.cops = D.base.cops;
    return inst;
  }
  if (kind == "finrel") {
    auto B = zoo::make_finrel(o.max_size);
    inst.C = B.C;
    inst.objs = B.objs;
    inst.prods = B.prods;
    inst.cops = B.cops;
    construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
    adopt_cldc(inst, construct::semiadditive_to_cldc(SI, opt), opt);
    return inst;
  }
  if (kind == "kleisli") {
    if (parts.size() != 3 || parts[1] != "finset") {
      throw InputError("builtin kleisli: expected kleisli:finset:<n>");
    }
    auto B = zoo::make_finset(parse_int(parts[2], spec));
    auto KR = construct::kleisli_exception(B.C, B.prods, B.cops, B.objs, opt);
    inst.C = KR.K;
    inst.objs = B.objs;
    inst.L = KR.L;
    inst.smc = KR.smc;
    inst.prods = KR.amp;
    inst.cops = KR.cops;
    append_reports(inst.assembly, KR.reports);
    inst.failure = KR.failure;
    // The not-a-CLDC certificate: on a nontrivial base, top & top is not
    // isomorphic to top + top, so the & products and the + coproducts cannot
    // carry a common linearly distributive structure.
    for (const auto& r : KR.reports) {
      if (r.law_id == "kleisli:not_cldc" && r.status == Status::Pass) {
        Obj t = B.prods.terminal;
        Obj ampApex = KR.amp.at(t, t).apex;
        Obj plusApex = KR.cops.at(t, t).apex;
        inst.not_cldc = "|top & top| = " + KR.K->obj_name(ampApex) +
                        " != " + KR.K->obj_name(plusApex) +
                        " = |top + top|";
      }
    }
    return inst;
  }
  if (kind == "grothendieck") {
    if (parts.size() != 3) {
      throw InputError("builtin grothendieck: expected grothendieck:<p|p2|p2up>:<n>");
    }
    auto B = zoo::make_finrel(parse_int(parts[2], spec));
    construct::SemiAddInput SI{B.C, B.prods, B.cops, B.zero, B.objs};
    auto base = construct::semiadditive_to_cldc(SI, opt);
    if (!base.ok()) throw InputError("grothendieck base failed: " + base.failure);
    auto PF = zoo::powerset_functors(B);
    const construct::LatticeValuedFunctor* F = nullptr;
    if (parts[1] == "p") F = &PF.P;
    else if (parts[1] == "p2") F = &PF.P2;
    else if (parts[1] == "p2up") F = &PF.P2up;
    else throw InputError("unknown powerset variant \"" + parts[1] + "\"");
    auto G = construct::grothendieck(*base.cldc, B.zero, *F, opt);
    inst.C = G.C;
    append_reports(inst.assembly, G.reports);
    inst.failure = G.failure;
    if (G.X) {
      inst.X = std::move(G.X);
      inst.objs = inst.X->objs;
      inst.L = inst.X->L;
      inst.prods = inst.X->prods;
      inst.cops = inst.X->cops;
    } else if (inst.failure.empty()) {
      inst.failure = "total category did not certify";
    }
    if (!inst.C) throw InputError("grothendieck construction failed: " + inst.failure);
    if (inst.objs.empty()) inst.objs = inst.C->objects();
    return inst;
  }
  throw InputError("unknown builtin \"" + kind + "\"");
}

Instance make_from_file(const std::string& path, const Options& o) {
  auto opt = make_options(o);
  std::string text = read_file(path);
  Instance inst;
  inst.desc = path;
  // Sniff the format: lattice files carry "elements", CLDC files carry
  // witness tables, plain category files carry neither.
  bool lattice = text.find("\"elements\"") != std::string::npos;
  bool cldc_file = text.find("\"products\"") != std::string::npos;
  if (lattice) {
    auto lat = construct::bdl_from_json(text, path);
    auto res = construct::bdl_to_cldc(lat, opt);
    append_reports(inst.assembly, res.reports);
    inst.failure = res.failure;
    if (res.X) {
      inst.X = std::move(res.X);
      inst.C = inst.X->C;
      inst.objs = inst.X->objs;
      inst.L = inst.X->L;
    }
    return inst;
  }
  if (cldc_file) {
    auto f = serialize::cldc_from_json(text);
    inst.C = f.C;
    inst.objs = f.objs;
    inst.prods = f.prods;
    inst.cops = f.cops;
    adopt_cldc(inst,
               cldc::assemble_cldc(f.C, f.prods, f.cops, f.objs, f.deltaL,
                                   f.deltaR, opt),
               opt);
    return inst;
  }
  auto C = std::make_shared<fincat::TableCategory>(
      serialize::category_from_json(text));
  inst.C = C;
  inst.objs = C->objects();
  inst.prods = limits::searched_products(C, inst.objs);
  inst.cops = limits::searched_coproducts(C, inst.objs);
  return inst;
}

Instance make_instance(const std::string& builtin, const std::string& file,
                       const Options& o) {
  if (!builtin.empty() && !file.empty()) {
    throw InputError("give either a builtin spec or a file, not both");
  }
  if (!builtin.empty()) return make_builtin(builtin, o);
  if (!file.empty()) return make_from_file(file, o);
  throw InputError("no instance given (use --builtin or --file)");
}

int exit_code(const Instance& inst, const std::vector<LawReport>& laws) {
  if (!inst.failure.empty()) return 1;
  return all_pass(laws) ? 0 : 1;
}

void emit(const Options& o, const std::string& instance,
          const std::vector<LawReport>& laws,
          const collapse::Classification* cls = nullptr) {
  if (o.output == "json") {
    std::cout << serialize::report_json(instance, laws, cls);
  } else {
    std::cout << serialize::report_text(instance, laws, cls);
  }
}

// ------------------------------------------------------------- commands ----

int cmd_validate(const Options& o) {
  Instance inst = make_instance(o.builtin, o.file, o);
  auto reports = fincat::validate_category(*inst.C, inst.objs);
  emit(o, inst.desc, reports);
  return all_pass(reports) ? 0 : 1;
}

int cmd_laws(const std::string& suite, const Options& o) {
  auto opt = make_options(o);
  Instance inst = make_instance(o.builtin, o.file, o);
  std::vector<LawReport> reports;
  if (suite == "ldc" || suite == "sldc") {
    if (!inst.L) throw InputError("instance has no linearly distributive structure");
    reports = suite == "ldc" ? ldc::check_ldc_laws(*inst.L, inst.objs, opt.base)
                             : ldc::sldc_suite(*inst.L, inst.objs, opt.base);
  } else if (suite == "cldc") {
    if (inst.X || !inst.failure.empty()) {
      reports = inst.assembly;
    } else if (!inst.not_cldc.empty()) {
      reports = inst.assembly;
      LawReport r;
      r.law_id = "cldc:assembly";
      r.status = Status::Fail;
      Witness w;
      w.objects = {"top & top", "top + top"};
      w.lhs_path = {"top & top"};
      w.rhs_path = {"top + top"};
      w.lhs_mor = inst.not_cldc;
      w.rhs_mor = "no isomorphism (certified by kleisli:not_cldc)";
      r.witness = std::move(w);
      reports.push_back(r);
      inst.failure = "not a CLDC: " + inst.not_cldc;
    } else if (inst.prods && inst.cops) {
      adopt_cldc(inst,
                 cldc::assemble_cldc(inst.C, *inst.prods, *inst.cops, inst.objs,
                                     std::nullopt, std::nullopt, opt),
                 opt);
      reports = inst.assembly;
    } else {
      throw InputError("instance has no chosen (co)products to assemble");
    }
  } else if (suite == "duoidal") {
    if (!inst.X) {
      throw InputError(
          "duoidal suite needs a certified instance" +
          (inst.failure.empty() ? "" : " (failure: " + inst.failure + ")"));
    }
    reports = cldc::duoidal_suite(*inst.X, opt);
  } else if (suite == "appendix") {
    if (!inst.smc) {
      throw InputError(
          "appendix suite needs a distributive symmetric monoidal instance "
          "with a zero object");
    }
    reports = construct::check_distributive_smc(*inst.smc, inst.objs);
    auto W = construct::wedge_construction(*inst.smc);
    append_reports(reports, ldc::sldc_suite(W, inst.objs, opt.base));
    auto mx = ldc::mix_analysis(W, inst.objs, opt.base);
    append_reports(reports, mx.reports);
    LawReport r;
    r.law_id = "wedge:mix_class";
    r.status = (mx.cls == ldc::MixClass::Isomix ||
                mx.cls == ldc::MixClass::Compact)
                   ? Status::Pass
                   : Status::Fail;
    r.note = "mix class: " + ldc::mix_class_name(mx.cls);
    reports.push_back(r);
  } else {
    throw InputError("unknown suite \"" + suite + "\"");
  }
  if (!inst.failure.empty()) {
    LawReport r;
    r.law_id = "assembly";
    r.status = Status::Fail;
    r.note = inst.failure;
    reports.push_back(r);
  }
  emit(o, inst.desc, reports);
  return exit_code(inst, reports);
}

int cmd_classify(const Options& o) {
  auto opt = make_options(o);
  Instance inst = make_instance(o.builtin, o.file, o);
  if (!inst.X) {
    throw InputError(
        "classification needs a certified instance" +
        (inst.failure.empty() ? "" : " (failure: " + inst.failure + ")"));
  }
  auto cls = collapse::classify(*inst.X);
  auto reports = cldc::cldc_theorem_suite(*inst.X, opt);
  emit(o, inst.desc, reports, &cls);
  return all_pass(reports) ? 0 : 1;
}

void write_result(const Options& o, const Instance& derived) {
  std::string text;
  if (derived.X) {
    try {
      text = serialize::cldc_to_json(*derived.X);
    } catch (const InputError&) {
      // Not closed over its bounded objects; fall back to the plain
      // category file.
      text = serialize::category_to_json(*derived.C, derived.objs);
    }
  } else {
    text = serialize::category_to_json(*derived.C, derived.objs);
  }
  if (o.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out_path);
    if (!out) throw InputError("cannot write file: " + o.out_path);
    out << text;
  }
}

int cmd_construct(const std::string& what, const Options& o) {
  auto opt = make_options(o);
  Instance derived;
  std::vector<LawReport> reports;

  if (what == "bdl" || what == "semiadd" || what == "kleisli" ||
      what == "grothendieck" || what == "wedge") {
    // These are built directly by the instance resolver (bdl files/builtins,
    // the semi-additive finrel builtin, kleisli:..., grothendieck:...).
    Instance inst = make_instance(o.builtin, o.file, o);
    if (what == "bdl" && !inst.X) {
      throw InputError("construct bdl: instance is not a lattice");
    }
    if (what == "semiadd" && !inst.X) {
      throw InputError("construct semiadd: instance did not certify: " +
                       inst.failure);
    }
    if (what == "wedge") {
      if (!inst.smc) {
        throw InputError("construct wedge: instance has no distributive "
                         "symmetric monoidal structure with zero");
      }
      auto W = construct::wedge_construction(*inst.smc);
      reports = ldc::sldc_suite(W, inst.objs, opt.base);
      derived = inst;
      derived.X.reset();  // the wedge is an SLDC, not a CLDC
    } else {
      reports = inst.assembly;
      derived = inst;
    }
    if (!inst.failure.empty()) {
      emit(o, inst.desc, reports);
      std::cerr << "construction failed: " << inst.failure << "\n";
      return 1;
    }
  } else if (what == "sz" || what == "slice" || what == "coslice") {
    Instance inst = make_instance(o.builtin, o.file, o);
    if (!inst.X) {
      throw InputError("construct " + what + ": instance did not certify: " +
                       inst.failure);
    }
    if (what == "sz") {
      auto R = construct::sz_subcategory(*inst.X, opt);
      reports = R.reports;
      if (!R.failure.empty()) {
        emit(o, inst.desc, reports);
        std::cerr << "construction failed: " << R.failure << "\n";
        return 1;
      }
      derived.desc = "sz[" + inst.desc + "]";
      derived.X = R.X;
      derived.C = R.X->C;
      derived.objs = R.X->objs;
    } else {
      auto R = what == "slice" ? construct::slice_cldc(*inst.X, opt)
                               : construct::coslice_cldc(*inst.X, opt);
      reports = R.reports;
      if (!R.failure.empty()) {
        emit(o, inst.desc, reports);
        std::cerr << "construction failed: " << R.failure << "\n";
        return 1;
      }
      derived.desc = what + "[" + inst.desc + "]";
      derived.X = R.X;
      derived.C = R.X->C;
      derived.objs = R.X->objs;
    }
  } else if (what == "product") {
    Instance left = make_instance(o.builtin, o.file, o);
    Instance right = make_instance(o.second_builtin, o.second_file, o);
    if (!left.X || !right.X) {
      throw InputError("construct product: both instances must certify");
    }
    auto R = construct::product_cldc(*left.X, *right.X, opt);
    reports = R.reports;
    if (!R.failure.empty()) {
      emit(o, left.desc + " x " + right.desc, reports);
      std::cerr << "construction failed: " << R.failure << "\n";
      return 1;
    }
    derived.desc = left.desc + " x " + right.desc;
    derived.X = R.X;
    derived.C = R.X->C;
    derived.objs = R.X->objs;
  } else {
    throw InputError("unknown construction \"" + what + "\"");
  }

  emit(o, derived.desc, reports);
  write_result(o, derived);
  return all_pass(reports) ? 0 : 1;
}

int cmd_diff(const Options& o) {
  Instance left = make_instance(o.builtin, o.file, o);
  Instance right = make_instance(o.second_builtin, o.second_file, o);
  if (o.functor_file.empty()) {
    throw InputError("diff needs --functor <file>");
  }
  auto ff = serialize::functor_from_json(read_file(o.functor_file));
  auto rf = serialize::resolve_functor(ff, left.C, left.objs, right.C,
                                       right.objs);
  std::vector<LawReport> reports = rf.reports;
  // Morphism-wise comparison: the functor must restrict to a bijection on
  // every hom-set between the bounded objects.
  LawChecker ck(*left.C);
  for (Obj a : left.objs) {
    for (Obj b : left.objs) {
      auto hs = left.C->hom(a, b);
      std::set<int> images;
      for (Mor m : hs) images.insert(rf.F.mor(m).id);
      size_t target = right.C->hom(rf.F.obj(a), rf.F.obj(b)).size();
      ck.check_that("diff:hom_bijection", {a, b},
                    images.size() == hs.size() && target == hs.size(),
                    std::to_string(hs.size()) + " morphisms, " +
                        std::to_string(images.size()) + " distinct images",
                    std::to_string(target) + " target morphisms");
    }
  }
  append_reports(reports, ck.take());
  emit(o, left.desc + " ~ " + right.desc, reports);
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model workbench for linearly distributive categories"};
  app.require_subcommand(1);

  Options o;
  if (const char* p = std::getenv("LDCW_PARALLELISM")) {
    o.parallelism = std::max(1, atoi(p));
  }
  std::string suite, what;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--builtin", o.builtin,
                  "builtin instance spec (bdl:chain:3, finrel, finpar, "
                  "finset, kleisli:finset:1, grothendieck:p2up:2)");
    c->add_option("--file", o.file, "instance file (category, CLDC or lattice)");
    c->add_option("--max-size", o.max_size, "object bound for the engines");
    c->add_option("--bound", o.bound, "object cap for quadruple-indexed laws");
    c->add_option("--output", o.output, "report format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    c->add_option("--parallelism", o.parallelism,
                  "worker cap (suites run deterministically; report order "
                  "is independent of this)");
    c->add_option("--seed", o.seed,
                  "seed for sampled checks (all shipped checks are "
                  "deterministic strides; accepted for interface stability)");
  };

  auto* validate = app.add_subcommand("validate", "check the category axioms");
  add_common(validate);

  auto* laws = app.add_subcommand("laws", "run a law suite");
  laws->add_option("suite", suite, "ldc | sldc | cldc | duoidal | appendix")
      ->required();
  add_common(laws);

  auto* classify = app.add_subcommand("classify",
                                      "classification flags and the "
                                      "equivalence-group cross-checks");
  add_common(classify);

  auto* constructc = app.add_subcommand("construct",
                                        "build a derived instance and write "
                                        "it to a category file");
  constructc
      ->add_option("what", what,
                   "bdl | semiadd | sz | slice | coslice | product | "
                   "grothendieck | kleisli | wedge")
      ->required();
  add_common(constructc);
  constructc->add_option("--second", o.second_builtin,
                         "second builtin instance (construct product)");
  constructc->add_option("--second-file", o.second_file,
                         "second instance file (construct product)");
  constructc->add_option("--out", o.out_path, "output file (default stdout)");

  auto* diff = app.add_subcommand("diff",
                                  "compare two instances morphism-wise "
                                  "along a functor file");
  add_common(diff);
  diff->add_option("--second", o.second_builtin, "second builtin instance");
  diff->add_option("--second-file", o.second_file, "second instance file");
  diff->add_option("--functor", o.functor_file,
                   "functor file: { \"objects\": {...}, \"morphisms\": {...} }");

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.max_size < 0 || o.bound < 1) {
      throw InputError("bounds must be positive");
    }
    if (validate->parsed()) return cmd_validate(o);
    if (laws->parsed()) return cmd_laws(suite, o);
    if (classify->parsed()) return cmd_classify(o);
    if (constructc->parsed()) return cmd_construct(what, o);
    if (diff->parsed()) return cmd_diff(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
