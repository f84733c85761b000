// arfold: classes, quivers, distance polynomials and verification suites.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include <CLI11.hpp>

#include "render.hpp"

using namespace arfold;

namespace {

struct Common {
  std::string type = "A";
  int rank = 0;
  std::string cluster = "twisted";
  std::string cls;
  std::string format = "ascii";
  std::string out;
  std::size_t cap = 0;
  int jobs = 1;
};

void add_system(CLI::App* app, Common& c, bool required) {
  auto* t = app->add_option("--type", c.type, "Dynkin type A, D or E")->check(CLI::IsMember({"A", "D", "E"}));
  auto* r = app->add_option("--rank", c.rank, "rank")->check(CLI::PositiveNumber);
  if (required) {
    t->required();
    r->required();
  }
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

RootSystem system_of(const Common& c) { return RootSystem::build(parse_type(c.type), c.rank); }

int cmd_classes(const Common& c) {
  auto rs = system_of(c);
  ClusterPoint cp = c.cluster == "twisted"
                        ? twisted_adapted_point(rs)
                        : cluster_point(CommutationClass(rs, adapted_word(DynkinQuiver::all(rs).front())));
  std::ostringstream os;
  for (const auto& cl : cp.classes()) os << join_word(cl.word()) << "\n";
  os << "total " << cp.size() << "\n";
  emit(c, os.str());
  return 0;
}

struct QuiverOpts {
  std::string quiver, fixture, twist;
  bool fold = false;
  int reflect = 0;
};

int cmd_quiver(const Common& c, const QuiverOpts& o) {
  // every object below points into these systems, so they live here
  std::unique_ptr<RootSystem> rs, target;
  std::optional<ARQuiver> q;
  std::optional<FoldedQuiver> folded;
  std::unique_ptr<DiagramAutomorphism> v;
  std::string title;

  if (!o.fixture.empty()) {
    rs = std::make_unique<RootSystem>(RootSystem::build(DynkinType::E, 6));
    v = std::make_unique<DiagramAutomorphism>(DiagramAutomorphism::folding(*rs));
    if (o.fixture == "e6-unfolded") {
      q = quiver_from_fixture(parse_fixture(e6_unfolded_text()), *rs);
    } else if (o.fixture == "e6-folded") {
      folded = e6_folded_quiver(*rs);
    } else if (o.fixture == "e6-r1") {
      q = quiver_from_fixture(parse_fixture(e6_folded_r1_text()), *rs);
    } else {
      throw Error("unknown fixture " + o.fixture);
    }
    title = "E6 " + o.fixture;
  } else {
    rs = std::make_unique<RootSystem>(system_of(c));
    if (!o.quiver.empty()) {
      DynkinQuiver dq = DynkinQuiver::parse(*rs, o.quiver);
      if (o.twist.empty()) {
        q = gamma_Q(dq);
        title = rs->name() + " Gamma_Q " + dq.describe();
      } else {
        if (rs->type() != DynkinType::A) throw Error("twisted constructions start from type A");
        std::optional<TwistResult> tr;
        if (o.twist == "greater" || o.twist == "less") {
          target = std::make_unique<RootSystem>(RootSystem::build(DynkinType::A, rs->rank() + 1));
          tr.emplace(twist_from_A(*target, *rs, adapted_word(dq), o.twist == "greater" ? InsertSide::Greater
                                                                                       : InsertSide::Less));
        } else if (o.twist == "dn" || o.twist == "dn1") {
          target = std::make_unique<RootSystem>(RootSystem::build(DynkinType::D, rs->rank() + 1));
          tr.emplace(twist_from_D(*target, dq, o.twist == "dn" ? rs->rank() : rs->rank() + 1));
        } else {
          throw Error("--twist must be greater, less, dn or dn1");
        }
        v = std::make_unique<DiagramAutomorphism>(DiagramAutomorphism::folding(*target));
        title = target->name() + " twisted " + join_word(tr->cls.word());
        if (o.fold) folded = FoldedQuiver{fold(tr->upsilon, *v), tr->cls.word()};
        else q = tr->upsilon;
      }
    } else {
      Word w = c.cls.empty() ? twisted_adapted_word(*rs) : parse_word(c.cls);
      if (c.cls.empty() && c.cluster == "adapted") w = adapted_word(DynkinQuiver::all(*rs).front());
      CommutationClass cl(*rs, w);
      title = rs->name() + " " + join_word(cl.word());
      if (auto dq = adapted_quiver_of(*rs, cl.word()); dq && !o.fold) {
        q = gamma_Q(*dq);
      } else {
        bool foldable = rs->type() != DynkinType::A || rs->rank() % 2 == 1;
        std::optional<ARQuiver> up;
        if (foldable) {
          v = std::make_unique<DiagramAutomorphism>(DiagramAutomorphism::folding(*rs));
          up = twisted_quiver(cl, *v);
        }
        if (up && o.fold) folded = folded_quiver(cl, *v);
        else if (up) q = *up;
        else if (o.fold) throw Error("class has no twisted coordinates to fold");
        else q = hasse_quiver(cl);
      }
    }
    if (o.fold && !folded && !q) throw Error("nothing to fold");
  }
  if (o.reflect) {
    if (!folded) throw Error("--reflect needs a folded quiver");
    const RootSystem& src = target ? *target : *rs;
    folded = folded_reflection(*folded, src, *v, o.reflect);
    title += " r" + std::to_string(o.reflect);
  }
  const ARQuiver& shown = folded ? folded->quiver : *q;
  std::string text;
  if (c.format == "ascii") text = "# " + title + "\n" + render_ascii(shown);
  else if (c.format == "dot") text = render_dot(shown, title);
  else text = quiver_to_json(shown).dump(2) + "\n";
  emit(c, text);
  return 0;
}

int cmd_dhat(const Common& c, const std::string& convention) {
  auto rs = system_of(c);
  auto v = DiagramAutomorphism::folding(rs);
  CommutationClass cl(rs, c.cls.empty() ? twisted_adapted_word(rs) : parse_word(c.cls));
  auto f = folded_quiver(cl, v);
  SeqOrder so(cl);
  SignConvention conv;
  if (convention.empty()) conv = rs.type() == DynkinType::A ? SignConvention::A : SignConvention::D;
  else conv = convention == "A" ? SignConvention::A : SignConvention::D;
  int rank = v.num_orbits();
  std::ostringstream os;
  os << "# " << rs.name() << " class " << join_word(cl.word()) << ", convention "
     << (conv == SignConvention::A ? "A" : "D") << "\n";
  for (int k = 1; k <= rank; ++k)
    for (int l = k; l <= rank; ++l) {
      auto data = distance_data(so, f.quiver, k, l);
      os << "D(" << k << "," << l << ") = " << distance_polynomial(data, k, l, conv).format();
      os << "   o_t:";
      for (auto [t, o] : data.o) os << " " << t << ":" << o;
      os << "\n";
    }
  emit(c, os.str());
  return 0;
}

struct VerifyOpts {
  std::string suite;
  std::string target;
  int n = 0;
  bool brute = false;
  bool shifted = false;
};

int cmd_verify(const Common& c, const VerifyOpts& o) {
  std::vector<Report> reports;
  auto pick = [&](std::vector<std::pair<Target, int>> defaults) {
    if (o.target.empty()) return defaults;
    Target t = o.target == "B" ? Target::B : Target::C;
    if (o.n == 0) throw Error("--target needs --n");
    return std::vector<std::pair<Target, int>>{{t, o.n}};
  };
  if (o.suite == "counts") {
    reports.push_back(verify_counts(c.jobs));
  } else if (o.suite == "den-dist") {
    for (auto [t, n] : pick({{Target::B, 2}, {Target::B, 3}, {Target::C, 3}, {Target::C, 4}})) {
      reports.push_back(verify_den_dist(t, n, c.jobs));
      reports.push_back(verify_class_invariance(t, n, c.jobs));
    }
  } else if (o.suite == "dorey") {
    auto reading = o.shifted ? DoreyReading::Shifted : DoreyReading::Printed;
    for (auto [t, n] : pick({{Target::B, 2}, {Target::B, 3}, {Target::C, 3}})) {
      reports.push_back(verify_dorey(t, n, c.jobs, reading));
      reports.push_back(verify_minimal_pair_coordinates(t, n, c.jobs, reading));
    }
  } else if (o.suite == "socle-dist") {
    std::vector<RootSystem> systems;
    if (c.rank) {
      systems.push_back(system_of(c));
    } else {
      systems.push_back(RootSystem::build(DynkinType::A, 3));
      systems.push_back(RootSystem::build(DynkinType::A, 5));
      systems.push_back(RootSystem::build(DynkinType::D, 4));
    }
    for (const auto& rs : systems) {
      reports.push_back(verify_socle_dist(rs, o.brute, c.jobs));
      reports.push_back(verify_bkm(rs, o.brute, c.jobs));
    }
  } else if (o.suite == "f4") {
    reports.push_back(verify_f4(c.jobs));
  } else {
    throw Error("unknown suite " + o.suite);
  }

  bool ok = true;
  std::ostringstream os;
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    os << r.summary() << "\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
    for (const auto& f : r.failures) os << "  MISMATCH " << f << "\n";
    std::cerr << r.name << ": " << r.seconds << " s\n";
    all.push_back(report_to_json(r));
  }
  std::cout << os.str();
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) throw Error("cannot write " + c.out);
    f << nlohmann::json{{"schema", "arfold/1"}, {"suite", o.suite}, {"ok", ok}, {"reports", all}}.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folded AR quivers, distance polynomials and Dorey data"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--cap", c.cap, "enumeration cap (overrides ARFOLD_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* classes = app.add_subcommand("classes", "list the classes of a cluster point");
  add_system(classes, c, true);
  classes->add_option("--cluster", c.cluster)->check(CLI::IsMember({"adapted", "twisted"}));
  classes->add_option("--out", c.out);

  QuiverOpts qo;
  auto* quiver = app.add_subcommand("quiver", "render an AR quiver");
  add_system(quiver, c, false);
  quiver->add_option("--cluster", c.cluster)->check(CLI::IsMember({"adapted", "twisted"}));
  quiver->add_option("--class", c.cls, "a member word, e.g. 1,2,1");
  quiver->add_option("--quiver", qo.quiver, "Dynkin quiver, e.g. 1<-2->3->4");
  quiver->add_option("--twist", qo.twist, "with --quiver: greater, less (type A) or dn, dn1 (type D)");
  quiver->add_option("--fixture", qo.fixture)->check(CLI::IsMember({"e6-unfolded", "e6-folded", "e6-r1"}));
  quiver->add_flag("--fold", qo.fold, "fold the twisted quiver");
  quiver->add_option("--reflect", qo.reflect, "apply the folded reflection at this index");
  quiver->add_option("--format", c.format)->check(CLI::IsMember({"ascii", "dot", "json"}));
  quiver->add_option("--out", c.out);

  std::string convention;
  auto* dhat = app.add_subcommand("dhat", "folded distance polynomials of a class");
  add_system(dhat, c, true);
  dhat->add_option("--class", c.cls);
  dhat->add_option("--convention", convention)->check(CLI::IsMember({"A", "D"}));
  dhat->add_option("--out", c.out);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vo.suite)->required()->check(
      CLI::IsMember({"den-dist", "dorey", "socle-dist", "counts", "f4"}));
  verify->add_option("--target", vo.target)->check(CLI::IsMember({"B", "C"}));
  verify->add_option("--n", vo.n)->check(CLI::PositiveNumber);
  add_system(verify, c, false);
  verify->add_flag("--brute", vo.brute, "cross-check against the brute-force order");
  verify->add_flag("--shifted", vo.shifted, "use the index-shifted reading of the B branch (ii)");
  verify->add_option("--out", c.out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);
  if (c.cap) set_default_cap(c.cap);
  try {
    if (*classes) return cmd_classes(c);
    if (*quiver) return cmd_quiver(c, qo);
    if (*dhat) return cmd_dhat(c, convention);
    if (*verify) return cmd_verify(c, vo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
