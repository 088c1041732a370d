// Command-line front door: graph generators, pipeline runner, witness
// verification and report rendering. Exit codes: 0 full pass, 1 verification
// failure, 2 usage/parse/precondition failure.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asdim/errors.hpp"
#include "asdim/generators.hpp"
#include "asdim/json_io.hpp"
#include "asdim/pipeline.hpp"

namespace fs = std::filesystem;
using namespace asdim;

namespace {

constexpr long long kExhaustiveLimit = 50000;

struct LambdaConfig {
  long long uniform_ball_n = -1;
  std::string lambda_file;
  std::string folner_action;
  std::string folner_words;

  int sources() const {
    return (uniform_ball_n >= 0 ? 1 : 0) + (lambda_file.empty() ? 0 : 1) +
           (folner_action.empty() ? 0 : 1);
  }

  MassAssignment build(const Graph& g) const {
    if (uniform_ball_n >= 0) return uniform_ball_lambda(g, uniform_ball_n);
    if (!lambda_file.empty()) {
      return mass_from_json(load_json_file(lambda_file), g.vertex_count());
    }
    FiniteAction action = action_from_json(load_json_file(folner_action));
    auto words = words_from_json(load_json_file(folner_words));
    return folner_lambda(action, words);
  }
};

VerifyOptions make_verify_options(const std::string& mode, long long vertices,
                                  bool seed_set, unsigned long long seed,
                                  long long samples) {
  VerifyOptions opts;
  bool sampled = mode == "sampled" || (mode == "auto" && vertices > kExhaustiveLimit);
  if (sampled) {
    if (!seed_set) {
      fail(ErrorCode::InvalidArgument, "sampled verification requires --seed");
    }
    opts.exhaustive = false;
    opts.seed = seed;
    opts.samples = samples;
  }
  return opts;
}

void write_json(const std::string& path, const Json& j) {
  write_file_atomic(path, pretty(j));
}

int cmd_gen(const std::string& kind, int n, int max_degree, unsigned long long seed,
            int legs, const std::string& action_file, const std::string& gens,
            const std::string& out) {
  Graph g = [&] {
    if (kind == "path") return make_path(n);
    if (kind == "star") return make_star(n);
    if (kind == "caterpillar") return make_caterpillar(n, legs);
    if (kind == "tree") return make_random_tree(n, max_degree, seed);
    if (kind == "schreier") {
      FiniteAction action = action_from_json(load_json_file(action_file));
      std::vector<int> subset;
      std::stringstream ss(gens);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) subset.push_back(std::stoi(tok));
      }
      return schreier_graph(action, subset);
    }
    fail(ErrorCode::InvalidArgument, "unknown generator " + kind);
  }();
  write_json(out + ".json", graph_to_json(g));
  write_file_atomic(out + ".dot", graph_to_dot(g));
  std::cout << "wrote " << out << ".json (" << g.vertex_count() << " vertices, "
            << g.edge_count() << " edges)\n";
  return 0;
}

int cmd_run(const std::string& graph_file, const std::string& radius,
            const LambdaConfig& lambda_cfg, const std::string& out_dir,
            const std::string& mode, bool seed_set, unsigned long long seed,
            long long samples) {
  Graph g = graph_from_json(load_json_file(graph_file));
  Rational r = Rational::parse(radius);
  MassAssignment lambda = lambda_cfg.build(g);
  PipelineOptions opts;
  opts.verify = make_verify_options(mode, g.vertex_count(), seed_set, seed, samples);

  fs::create_directories(out_dir);
  PipelineArtifacts art = run_pipeline(g, lambda, r, opts);
  write_json(out_dir + "/theta.json", theta_to_json(art.theta));
  write_json(out_dir + "/orientation.json", orientation_to_json(art.partition));
  write_file_atomic(out_dir + "/orientation.dot", orientation_to_dot(g, art.partition));
  write_json(out_dir + "/deletion.json", deletion_to_json(art.deletion));
  write_json(out_dir + "/witness.json", witness_to_json(art.witness));
  write_json(out_dir + "/report.json", pipeline_report_json(art));

  std::cout << (art.pass ? "PASS" : "FAIL") << ": max classes met "
            << art.witness.max_classes_met << " (bound 4), diameter bound "
            << art.witness.diameter_bound.str() << "\n";
  return art.pass ? 0 : 1;
}

int cmd_verify(const std::string& graph_file, const std::string& witness_file,
               const std::string& mode, bool seed_set, unsigned long long seed,
               long long samples) {
  Graph g = graph_from_json(load_json_file(graph_file));
  CoverWitness w = witness_from_json(load_json_file(witness_file));
  if (w.partition.vertex_count() != g.vertex_count()) {
    fail(ErrorCode::IncompletePartition, "witness does not cover the vertex set");
  }
  VerifyOptions opts =
      make_verify_options(mode, g.vertex_count(), seed_set, seed, samples);
  CoverCheck check = verify_cover(g, w, opts);
  std::cout << "observed max classes met: " << check.max_classes_met
            << " (claimed " << w.max_classes_met << ")\n"
            << "observed max diameter:    " << check.max_diameter << " (bound "
            << w.diameter_bound.str() << ")\n";
  for (const auto& v : check.violations) std::cout << "violation: " << v << "\n";
  std::cout << (check.pass ? "PASS" : "FAIL") << "\n";
  return check.pass ? 0 : 1;
}

int cmd_report(const std::string& in) {
  Json j = load_json_file(in);
  auto line = [](const std::string& name, bool pass, const std::string& extra) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!extra.empty()) std::cout << " (" << extra << ")";
    std::cout << "\n";
  };
  if (j.contains("defect_gate")) {
    line("defect gate", j["defect_gate"]["pass"].get<bool>(),
         "radius " + j["defect_gate"]["radius"].get<std::string>());
  }
  if (j.contains("conditions")) {
    for (const char* c : {"C1", "C2", "C3", "C4", "C5"}) {
      const auto& item = j["conditions"][c];
      line(c, item["pass"].get<bool>(),
           item.contains("detail") ? item["detail"].get<std::string>() : "");
    }
  }
  if (j.contains("deletion")) {
    line("deletion bound", j["deletion"]["pass"].get<bool>(),
         "max residual component " +
             std::to_string(j["deletion"]["residual_component_max"].get<long long>()));
  }
  if (j.contains("q_separation")) {
    line("q separation", j["q_separation"]["pass"].get<bool>(),
         j["q_separation"]["detail"].get<std::string>());
  }
  if (j.contains("functional_cover")) {
    line("functional cover (<= 2 classes)",
         j["functional_cover"]["pass"].get<bool>(),
         "met " + std::to_string(j["functional_cover"]["max_classes_met"].get<int>()));
  }
  if (j.contains("witness")) {
    line("final witness (<= 4 classes)", j["witness"]["pass"].get<bool>(),
         "met " + std::to_string(j["witness"]["max_classes_met"].get<int>()));
  }
  bool overall = j.value("overall_pass", false);
  line("overall", overall, "");
  return overall ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asdim: orientation and covering workbench for finite forests"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph (json + dot)");
  gen->require_subcommand(1);
  std::string gen_out = "graph";
  int gen_n = 10, gen_maxdeg = 3, gen_legs = 1;
  unsigned long long gen_seed = 0;
  std::string gen_action, gen_gens;
  auto add_gen_sub = [&](const std::string& name, const std::string& desc) {
    auto* sub = gen->add_subcommand(name, desc);
    sub->add_option("--out", gen_out, "output basename");
    return sub;
  };
  auto* gen_path = add_gen_sub("path", "path on n vertices");
  gen_path->add_option("--n", gen_n, "vertex count")->required();
  auto* gen_star = add_gen_sub("star", "star with n leaves");
  gen_star->add_option("--leaves", gen_n, "leaf count")->required();
  auto* gen_cat = add_gen_sub("caterpillar", "spine with pendant leaves");
  gen_cat->add_option("--spine", gen_n, "spine length")->required();
  gen_cat->add_option("--legs", gen_legs, "legs per spine vertex");
  auto* gen_tree = add_gen_sub("tree", "random tree with a degree cap");
  gen_tree->add_option("--n", gen_n, "vertex count")->required();
  gen_tree->add_option("--max-degree", gen_maxdeg, "degree cap");
  gen_tree->add_option("--seed", gen_seed, "rng seed")->required();
  auto* gen_sch = add_gen_sub("schreier", "Schreier graph of an action");
  gen_sch->add_option("--action", gen_action, "action json file")->required();
  gen_sch->add_option("--gens", gen_gens, "comma-separated generator indices")
      ->required();

  // lambda
  auto* lam = app.add_subcommand("lambda", "generate a mass assignment file");
  lam->require_subcommand(1);
  std::string lam_graph, lam_action, lam_words, lam_out = "lambda.json";
  long long lam_n = 1;
  auto* lam_ball = lam->add_subcommand("uniform-ball", "uniform mass on balls");
  lam_ball->add_option("--graph", lam_graph, "graph json")->required();
  lam_ball->add_option("--n", lam_n, "ball radius")->required();
  lam_ball->add_option("--out", lam_out, "output file");
  auto* lam_folner = lam->add_subcommand("folner", "averaged word images");
  lam_folner->add_option("--action", lam_action, "action json")->required();
  lam_folner->add_option("--words", lam_words, "words json")->required();
  lam_folner->add_option("--out", lam_out, "output file");

  // run
  auto* run = app.add_subcommand("run", "run the full pipeline");
  std::string run_graph, run_r, run_out = "out", run_mode = "auto";
  LambdaConfig lambda_cfg;
  unsigned long long run_seed = 0;
  long long run_samples = 50000;
  run->add_option("--graph", run_graph, "graph json")->required();
  run->add_option("--r", run_r, "target radius (rational)")->required();
  run->add_option("--uniform-ball", lambda_cfg.uniform_ball_n,
                  "uniform-ball mass with this radius");
  run->add_option("--lambda-file", lambda_cfg.lambda_file, "mass json file");
  run->add_option("--folner-action", lambda_cfg.folner_action, "action json");
  run->add_option("--folner-words", lambda_cfg.folner_words, "words json");
  run->add_option("--out", run_out, "output directory");
  run->add_option("--mode", run_mode, "auto|exhaustive|sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  auto* run_seed_opt = run->add_option("--seed", run_seed, "sampling seed");
  run->add_option("--samples", run_samples, "sample count");

  // verify
  auto* verify = app.add_subcommand("verify", "re-verify a cover witness");
  std::string verify_graph, verify_witness, verify_mode = "auto";
  unsigned long long verify_seed = 0;
  long long verify_samples = 50000;
  verify->add_option("--graph", verify_graph, "graph json")->required();
  verify->add_option("--witness", verify_witness, "witness json")->required();
  verify->add_option("--mode", verify_mode, "auto|exhaustive|sampled")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  auto* verify_seed_opt = verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--samples", verify_samples, "sample count");

  // report
  auto* report = app.add_subcommand("report", "render a report json");
  std::string report_in;
  report->add_option("--in", report_in, "report json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      std::string kind = gen->get_subcommands().front()->get_name();
      return cmd_gen(kind, gen_n, gen_maxdeg, gen_seed, gen_legs, gen_action,
                     gen_gens, gen_out);
    }
    if (lam->parsed()) {
      if (lam_ball->parsed()) {
        Graph g = graph_from_json(load_json_file(lam_graph));
        write_json(lam_out, mass_to_json(uniform_ball_lambda(g, lam_n)));
      } else {
        FiniteAction action = action_from_json(load_json_file(lam_action));
        auto words = words_from_json(load_json_file(lam_words));
        write_json(lam_out, mass_to_json(folner_lambda(action, words)));
      }
      std::cout << "wrote " << lam_out << "\n";
      return 0;
    }
    if (run->parsed()) {
      if (lambda_cfg.sources() != 1) {
        fail(ErrorCode::InvalidArgument,
             "exactly one of --uniform-ball, --lambda-file, --folner-action");
      }
      if (!lambda_cfg.folner_action.empty() && lambda_cfg.folner_words.empty()) {
        fail(ErrorCode::InvalidArgument, "--folner-action needs --folner-words");
      }
      return cmd_run(run_graph, run_r, lambda_cfg, run_out, run_mode,
                     run_seed_opt->count() > 0, run_seed, run_samples);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_graph, verify_witness, verify_mode,
                        verify_seed_opt->count() > 0, verify_seed, verify_samples);
    }
    if (report->parsed()) return cmd_report(report_in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConditionsFailed ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
