// Command-line front end for the garside library.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "garside/absorbable.hpp"
#include "garside/acceptance.hpp"
#include "garside/braid_topology.hpp"
#include "garside/cache.hpp"
#include "garside/error.hpp"
#include "garside/hyp_metrics.hpp"
#include "garside/parallel.hpp"

using namespace garside;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded:
    case ErrorCode::UniverseTooSmall:
    case ErrorCode::NotFoundWithinRadius:
    case ErrorCode::NotFoundWithinSearch:
      return kExitInconclusive;
    case ErrorCode::Io:
      return kExitCheckFailed;
    default:
      return kExitUsage;
  }
}

struct Output {
  Json data = Json::object();
  std::vector<std::string> lines;
  int status = kExitPass;

  template <class T>
  void put(const std::string& key, const T& value) {
    data[key] = value;
    std::ostringstream s;
    s << key << "=" << Json(value).dump();
    lines.push_back(s.str());
  }
  void text(const std::string& line) { lines.push_back(line); }
};

// Options shared by all subcommands.
struct Common {
  bool json = false;
  int jobs = 1;
  std::string config;
};

// Groups loaded by this process, for writing memo caches on exit.
std::vector<GroupPtr> g_loaded;

GroupPtr load_group(const std::string& spec) {
  CoxeterGraph graph = parse_group_spec(spec);
  // Rank-2 groups use the dihedral labels a, b throughout the CLI.
  if (graph.rank() == 2) graph = CoxeterGraph::from_matrix({"a", "b"}, graph.matrix());
  GroupPtr g = CoxeterGroup::build(graph);
  if (auto dir = cache_dir_from_env()) load_memo_cache(memo_cache_path(*dir, *g), *g);
  g_loaded.push_back(g);
  return g;
}

void save_caches() {
  const auto dir = cache_dir_from_env();
  if (!dir) return;
  for (const GroupPtr& g : g_loaded) {
    try {
      save_memo_cache(memo_cache_path(*dir, *g), *g);
    } catch (const Error& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
}

struct GraphExport {
  std::string out;
  std::string format = "json";

  void add_options(CLI::App* sub) {
    sub->add_option("--out", out, "Write the graph to this path ('-' for stdout)");
    sub->add_option("--format", format, "Export format")->check(CLI::IsMember({"json", "dot"}));
  }

  void emit(const MetricGraph& q, Output& o) const {
    o.put("vertices", q.vertex_count());
    o.put("edges", q.edge_count());
    if (out.empty()) return;
    const std::string doc = format == "dot" ? q.to_dot() : q.to_json();
    if (out == "-") {
      std::cout << doc << "\n";
      return;
    }
    std::ofstream f(out, std::ios::trunc);
    if (!f) throw Error(ErrorCode::Io, "cannot open " + out + " for writing");
    f << doc << "\n";
    if (!f) throw Error(ErrorCode::Io, "write failed for " + out);
    o.put("written", out);
  }
};

Json element_json(const GarsideElement& g) {
  Json factors = Json::array();
  for (Simple x : g.factors()) factors.push_back(g.group()->render(x));
  return Json{{"inf", g.inf()}, {"factors", factors}, {"normal_form", g.render()}};
}

void put_element(Output& o, const std::string& key, const GarsideElement& g) {
  o.data[key] = element_json(g);
  o.lines.push_back(key + "=" + g.render());
}

std::string verdict_name(Verdict v) {
  return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "unknown";
}

// Config files hold flat key=value lines; each key names a long option of
// the active subcommand. Options given on the command line win.
std::vector<std::string> apply_config(CLI::App& app, std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  CLI::App* sub = nullptr;
  for (const std::string& a : args)
    if (!a.empty() && a[0] != '-') {
      sub = app.get_subcommand_no_throw(a);
      break;
    }
  if (sub == nullptr) throw CLI::ValidationError("--config", "a subcommand is required before reading a config file");

  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  const auto given = [&](const std::string& flag) {
    for (const std::string& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--config", path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr)
      throw CLI::ValidationError("--config", path + ":" + std::to_string(lineno) + ": '" + key +
                                                 "' is not an option of '" + sub->get_name() + "'");
    if (given(flag)) continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") args.push_back(flag);
      continue;
    }
    args.push_back(flag);
    args.push_back(value);
  }
  return args;
}

using Runner = std::function<void(Output&)>;

struct Cli {
  CLI::App app{"Garside normal forms and parabolic geometry for spherical Artin groups", "garside"};
  Common common;
  std::map<CLI::App*, Runner> runners;

  CLI::App* command(const std::string& name, const std::string& help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", common.json, "Machine-readable output");
    sub->add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_option("--config", common.config, "File of key=value option defaults");
    runners[sub] = std::move(run);
    return sub;
  }
};

// Holders for option values; they outlive parsing.
struct Args {
  std::string group, word, a, b, subset, parabolic, genset = "XP", x, y, kind = "quotient", graph_in;
  int len = 2, conj_len = 1, hops = 1, radius = 1, universe = 4, generator_len = -1, sup_bound = 0;
  int n = 3, i = 1, k = 1, samples = 1000, gsearch = 2, max_word = 4;
  std::uint64_t witness_bound = kDefaultWitnessBound, sample = 10000, seed = 1;
  bool half = false, check_distances = false, per_component = false;
  int image_conj_len = -1, expect_m1 = -1;
  std::vector<int> criteria;
  GraphExport gx;
};

void build(Cli& cli, Args& A) {
  const auto group_opt = [&](CLI::App* s) { s->add_option("--group", A.group, "Group spec, e.g. A3, B4, I2(5)")->required(); };

  auto* nf = cli.command("nf", "Left normal form of a word", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const GarsideElement e = normal_form(g, parse_word(g->graph(), A.word));
    o.data = element_json(e);
    o.lines = {e.render()};
  });
  group_opt(nf);
  nf->add_option("--word", A.word, "Word, e.g. \"a a b\" or \"s1^-2 D\"")->required();

  auto* mul = cli.command("mul", "Product of two words", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const GarsideElement e = parse_element(g, A.a) * parse_element(g, A.b);
    o.data = element_json(e);
    o.lines = {e.render()};
  });
  group_opt(mul);
  mul->add_option("--a", A.a, "Left factor")->required();
  mul->add_option("--b", A.b, "Right factor")->required();

  auto* inv = cli.command("inv", "Inverse of a word", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const GarsideElement e = parse_element(g, A.word).inverse();
    o.data = element_json(e);
    o.lines = {e.render()};
  });
  group_opt(inv);
  inv->add_option("--word", A.word)->required();

  auto* member = cli.command("member", "Membership in a standard parabolic A_T", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const MembershipResult r = standard_membership_detail(parse_element(g, A.word), parse_subset(g->graph(), A.subset));
    o.put("member", r.member);
    o.put("m", r.m);
    o.put("certified_by_np_form", r.certified_by_np_form);
  });
  group_opt(member);
  member->add_option("--word", A.word)->required();
  member->add_option("--subset", A.subset, "Generators of T, e.g. s1,s2")->required();

  auto* normalizer = cli.command("normalizer", "Whether an element normalizes A_T", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    o.put("normalizes", normalizer_membership(parse_element(g, A.word), parse_subset(g->graph(), A.subset)));
  });
  group_opt(normalizer);
  normalizer->add_option("--word", A.word)->required();
  normalizer->add_option("--subset", A.subset)->required();

  auto* omega = cli.command("omega", "Minimal central element of A_T", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const GenSet t = A.subset.empty() ? full_set(g->rank()) : parse_subset(g->graph(), A.subset);
    const OmegaResult r = omega_of(g, t);
    put_element(o, "omega", r.element);
    o.put("is_delta", r.is_delta);
  });
  group_opt(omega);
  omega->add_option("--subset", A.subset, "Generators of T (default: all)");

  auto* cparab = cli.command("cparab", "Truncated graph of parabolic subgroups", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const ParabolicSubgroup p0 = A.parabolic.empty()
                                     ? standard_parabolic(g, gen_bit(0))
                                     : parse_parabolic(g, A.parabolic);
    const CparabGraph c = build_cparab_neighborhood(p0, A.conj_len, A.hops);
    o.put("center", c.subgroups[c.center].render());
    A.gx.emit(c.graph, o);
  });
  group_opt(cparab);
  cparab->add_option("--parabolic", A.parabolic, "Centre, \"std:s1\" or \"conj:(word):s1,s2\"");
  cparab->add_option("--conj-len", A.conj_len, "Canonical length bound on conjugators")->check(CLI::NonNegativeNumber);
  cparab->add_option("--hops", A.hops, "Neighbourhood radius")->check(CLI::NonNegativeNumber);
  A.gx.add_options(cparab);

  auto* cal = cli.command("cal", "Absorbable-augmented Cayley graph modulo Delta", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    A.gx.emit(build_cal_graph(g, A.len, A.witness_bound), o);
  });
  group_opt(cal);
  cal->add_option("--len", A.len, "Canonical length bound on coset representatives")->check(CLI::NonNegativeNumber);
  cal->add_option("--witness-bound", A.witness_bound);
  A.gx.add_options(cal);

  auto* qc = cli.command("quotient-cayley", "Cayley graph over the simples modulo Delta", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    A.gx.emit(quotient_cayley_graph(g, A.len), o);
  });
  group_opt(qc);
  qc->add_option("--len", A.len)->check(CLI::NonNegativeNumber);
  A.gx.add_options(qc);

  auto* ball = cli.command("ball", "Cayley ball of a generating set", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const GeneratingSetOracle orc(g, parse_genset_kind(A.genset), A.witness_bound);
    A.gx.emit(bounded_ball_graph(orc, A.radius, A.universe, A.generator_len), o);
  });
  group_opt(ball);
  ball->add_option("--genset", A.genset, "XP, XNP, Xabs, Simples or FiniteS_plus_Delta2");
  ball->add_option("--radius", A.radius)->check(CLI::NonNegativeNumber);
  ball->add_option("--universe", A.universe, "simple_length bound on vertices")->check(CLI::NonNegativeNumber);
  ball->add_option("--generator-len", A.generator_len, "simple_length bound on generators (default: universe)");
  ball->add_option("--witness-bound", A.witness_bound);
  A.gx.add_options(ball);

  auto* wordlen = cli.command("wordlen", "Word length bound over a generating set", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const GeneratingSetOracle orc(g, parse_genset_kind(A.genset), A.witness_bound);
    const GarsideElement e = parse_element(g, A.word);
    const WordLength w = word_length_bound(e, orc, A.universe);
    o.put("membership", verdict_name(orc.verdict(e)));
    o.put("length", w.render());
    if (w.kind == WordLength::Kind::Unknown) o.status = kExitInconclusive;
  });
  group_opt(wordlen);
  wordlen->add_option("--word", A.word)->required();
  wordlen->add_option("--genset", A.genset, "XP, XNP, Xabs, Simples or FiniteS_plus_Delta2");
  wordlen->add_option("--universe", A.universe)->check(CLI::NonNegativeNumber);
  wordlen->add_option("--witness-bound", A.witness_bound);

  auto* census = cli.command("census", "Absorbable elements up to a canonical length", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const int bound = A.sup_bound > 0 ? A.sup_bound : 2 * g->max_length();
    const Census c = enumerate_absorbable(g, bound, A.witness_bound);
    o.put("count", c.elements.size());
    if (g->rank() == 2) {
      const int expected = 4 * g->max_length() - 8;
      o.put("expected", expected);
      if (static_cast<int>(c.elements.size()) != expected) o.status = kExitCheckFailed;
    }
    o.put("truncated", c.truncated);
    if (c.truncated && o.status == kExitPass) o.status = kExitInconclusive;
    Json els = Json::array();
    for (const auto& e : c.elements) els.push_back(e.render());
    o.data["elements"] = els;
    for (const auto& e : c.elements) o.text("  " + e.render());
  });
  group_opt(census);
  census->add_option("--sup-bound", A.sup_bound, "Canonical length bound (default: twice the Coxeter length of Delta)");
  census->add_option("--witness-bound", A.witness_bound);

  auto* fat = cli.command("fat-triangle", "Triangle of an absorption pair and its distance checks", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const FatTriangle t = build_fat_triangle(parse_element(g, A.x), parse_element(g, A.y));
    o.put("L", t.length);
    put_element(o, "xy", t.xy);
    if (A.check_distances) {
      const MetricGraph q = quotient_cayley_graph(g, t.length + 2);
      const FatTriangleReport r = fat_triangle_distances(t, q);
      o.put("pair_checks", r.pair_checks);
      o.put("pair_failures", r.pair_failures);
      o.put("corner_checks", r.corner_checks);
      o.put("corner_failures", r.corner_failures);
      o.data["failures"] = r.failures;
      for (const auto& f : r.failures) o.text("  " + f);
      if (!r.passed()) o.status = kExitCheckFailed;
    }
    if (A.image_conj_len >= 0) {
      const DiameterBound d = cparab_image_diameter(t, A.image_conj_len);
      o.put("image_diameter", d.diameter);
      o.put("image_count", d.images);
      o.put("image_graph_vertices", d.vertices);
    }
  });
  group_opt(fat);
  fat->add_option("--x", A.x, "Absorbing element")->required();
  fat->add_option("--y", A.y, "Absorbed element")->required();
  fat->add_flag("--check-distances", A.check_distances, "Verify distance = max(d1, d2) in the quotient graph");
  fat->add_option("--image-diameter", A.image_conj_len, "Diameter of the parabolic images, with this conjugator bound");

  auto* arc = cli.command("arc-identity", "Arc-stabilizer word identity in A_n", [&](Output& o) {
    const ArcIdentity r = arc_stabilizer_words(A.n, A.i, A.k, A.half);
    put_element(o, "tubular", r.tubular);
    put_element(o, "twists", r.twists);
    o.put("holds", r.holds);
    if (!r.holds) o.status = kExitCheckFailed;
  });
  arc->add_option("--n", A.n, "Rank of A_n")->required();
  arc->add_option("--i", A.i)->required();
  arc->add_option("--k", A.k);
  arc->add_flag("--half", A.half, "Half-twist branch (2i = n+1)");

  auto* dbl = cli.command("double", "Double the first strand of a braid", [&](Output& o) {
    if (A.n < 2) throw Error(ErrorCode::RankTooSmall, "--n must be at least 2");
    const GroupPtr in = type_a_group(A.n - 1);
    const DoubledStrand d = double_first_strand_detail(parse_word(in->graph(), A.word), A.n);
    put_element(o, "image", d.image);
    o.put("tracked_crossings", d.tracked_crossings);
    o.put("normalizes_s1", normalizer_membership(d.image, gen_bit(0)));
  });
  dbl->add_option("--n", A.n, "Strands of the input braid; output lies in A_n")->required();
  dbl->add_option("--word", A.word, "Braid word in s1..s(n-1)")->required();

  auto* df = cli.command("delta-factor", "Delta as a product of three parabolic simples", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const auto f = delta_three_parabolic_factorization(g);
    Json factors = Json::array();
    for (const auto& p : f) {
      factors.push_back({{"word", p.element.to_word()}, {"subset", g->graph().render_subset(p.t)}});
      o.text(p.element.to_word() + "  in A{" + g->graph().render_subset(p.t) + "}");
    }
    o.data["factors"] = factors;
    const bool ok = f[0].element * f[1].element * f[2].element == GarsideElement::delta_power(g, 1);
    o.data["product_is_delta"] = ok;
    o.text("product_is_delta=" + std::string(ok ? "true" : "false"));
    if (!ok) o.status = kExitCheckFailed;
  });
  group_opt(df);

  auto* qi = cli.command("qi-constants", "Quasi-isometry constants for a C_parab truncation", [&](Output& o) {
    const GroupPtr g = load_group(A.group);
    const CparabGraph q = cparab_graph_on(parabolic_conjugates(g, A.conj_len));
    std::vector<int> reps(q.graph.vertex_count());
    for (std::size_t v = 0; v < reps.size(); ++v) reps[v] = static_cast<int>(v);
    QiOptions qo;
    qo.gsearch_radius = A.gsearch;
    qo.lipschitz_samples = A.samples;
    qo.max_word = A.max_word;
    qo.seed = A.seed;
    const QiReport r = qi_constants(q, reps, q.graph.edges(), qo);
    o.put("vertices", q.graph.vertex_count());
    o.put("M1", r.m1);
    o.put("M2", r.m2);
    o.put("M2_exact", r.m2_exact);
    o.put("M3", r.m3);
    o.put("M3_exact", r.m3_exact);
    o.put("A0_size", r.a0.size());
    o.put("samples", r.samples);
    o.put("lipschitz_failures", r.lipschitz_failures);
    o.put("max_distance", r.max_distance);
    o.put("seed", r.seed);
    if (r.lipschitz_failures > 0 || (A.expect_m1 >= 0 && r.m1 != A.expect_m1)) o.status = kExitCheckFailed;
  });
  group_opt(qi);
  qi->add_option("--conj-len", A.conj_len, "Conjugator bound for the vertex set")->check(CLI::NonNegativeNumber);
  qi->add_option("--samples", A.samples, "Sampled (word, edge) pairs for the Lipschitz check");
  qi->add_option("--gsearch", A.gsearch, "simple_length radius for the connecting-element search");
  qi->add_option("--max-word", A.max_word, "Length of sampled words");
  qi->add_option("--seed", A.seed);
  qi->add_option("--expect-m1", A.expect_m1, "Fail unless M1 equals this value");

  auto* de = cli.command("delta-estimate", "Four-point hyperbolicity estimate of a finite graph", [&](Output& o) {
    MetricGraph q;
    if (!A.graph_in.empty()) {
      std::ifstream f(A.graph_in);
      if (!f) throw Error(ErrorCode::Io, "cannot read " + A.graph_in);
      std::stringstream s;
      s << f.rdbuf();
      q = MetricGraph::from_json(s.str());
    } else {
      if (A.group.empty()) throw Error(ErrorCode::PreconditionViolated, "give --graph or --group");
      const GroupPtr g = load_group(A.group);
      q = A.kind == "cal" ? build_cal_graph(g, A.len, A.witness_bound) : quotient_cayley_graph(g, A.len);
    }
    const DeltaEstimate d = estimate_delta(q, A.sample, A.seed, A.per_component);
    o.put("vertices", q.vertex_count());
    o.put("delta", d.value());
    o.put("exact", d.exact);
    o.put("tuples", d.tuples);
    o.put("seed", d.seed);
  });
  de->add_option("--graph", A.graph_in, "Graph JSON written by --format json");
  de->add_option("--group", A.group, "Build the graph instead of reading it");
  de->add_option("--kind", A.kind, "Graph to build")->check(CLI::IsMember({"quotient", "cal"}));
  de->add_option("--len", A.len)->check(CLI::NonNegativeNumber);
  de->add_option("--sample", A.sample, "Number of sampled 4-tuples; exhaustive when large enough");
  de->add_option("--seed", A.seed);
  de->add_flag("--per-component", A.per_component, "Maximum over components instead of failing");
  de->add_option("--witness-bound", A.witness_bound);

  auto* accept = cli.command("accept", "Run acceptance criteria", [&](Output& o) {
    std::vector<int> ids = A.criteria;
    if (ids.empty())
      for (int c = 1; c <= kCriterionCount; ++c) ids.push_back(c);
    AcceptanceOptions opts;
    opts.seed = A.seed;
    Json results = Json::array();
    int worst = kExitPass;
    for (int id : ids) {
      const CriterionResult r = run_criterion(id, opts);
      const int code = exit_status(r.status);
      if (code == kExitCheckFailed || (code == kExitInconclusive && worst == kExitPass)) worst = code;
      results.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.status == CheckStatus::Pass},
                         {"status", code == 0 ? "PASS" : code == 1 ? "FAIL" : "INCONCLUSIVE"},
                         {"detail", r.detail}, {"seconds", r.seconds}});
      o.text(format_result(r));
    }
    o.data["criteria"] = results;
    o.status = worst;
  });
  accept->add_option("--criterion", A.criteria, "Criterion ids (default: all)")->check(CLI::Range(1, kCriterionCount));
  accept->add_option("--seed", A.seed);
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  Args A;
  build(cli, A);
  cli.app.require_subcommand(1);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config(cli.app, std::move(args));
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return cli.app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.app.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.app.exit(e);
    return kExitUsage;
  }

  set_default_jobs(cli.common.jobs);
  CLI::App* active = cli.app.get_subcommands().front();
  Output out;
  int status = kExitPass;
  try {
    cli.runners.at(active)(out);
    status = out.status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = exit_code_for(e.code());
    if (cli.common.json) {
      std::cout << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    }
    save_caches();
    return status;
  }
  if (cli.common.json) {
    out.data["exit"] = status;
    std::cout << out.data.dump(2) << "\n";
  } else {
    for (const auto& l : out.lines) std::cout << l << "\n";
  }
  save_caches();
  return status;
}
