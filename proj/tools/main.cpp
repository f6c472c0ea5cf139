// Command-line driver: equality, normalization, order and commutation
// queries on the word DSL, the relation suite, derivation replay, and the
// plane simulator cross-check.
//
// Exit codes: 0 success / property holds, 1 property fails or a
// verification suite reports a failure, 2 input could not be parsed
// (expression, trace file, geometry config, usage), 3 the word length cap
// was exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fbraid/dsl.hpp"
#include "fbraid/geom.hpp"
#include "fbraid/serialize.hpp"
#include "fbraid/trace.hpp"
#include "fbraid/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

std::string default_trace_path() {
  const char* local = "data/sigma3_derivation.json";
  if (std::filesystem::exists(local)) return local;
  return std::string(FBRAID_DATA_DIR) + "/sigma3_derivation.json";
}

fbraid::ModelElement eval_text(const fbraid::Model& model, const std::string& text) {
  return fbraid::dsl::eval(fbraid::dsl::parse(text), model);
}

struct Output {
  bool no_timing = false;
  std::string path;  // empty = stdout
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void emit(nlohmann::ordered_json doc) const {
    if (!no_timing) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      doc["duration_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    if (path.empty()) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
      out << doc.dump(2) << '\n';
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word calculus and plane simulator for a framed circular braid family"};
  app.require_subcommand(1);

  Output output;
  bool no_central_relation = false;
  std::size_t word_cap = fbraid::Word::length_cap();
  app.add_flag("--no-timing", output.no_timing, "omit wall-clock fields from reports");
  app.add_option("--out", output.path, "write the report to a file instead of stdout");
  app.add_flag("--no-central-relation", no_central_relation,
               "drop the full-twist/framing identification (plain framed braid group)");
  app.add_option("--word-cap", word_cap, "cap on reduced free-group word length");

  std::string expr_a, expr_b, trace_path, config_path, svg_path;
  int max_order = 120;
  int depth_override = 0;

  CLI::App* cmd_eq = app.add_subcommand("eq", "decide equality of two expressions");
  cmd_eq->add_option("expr1", expr_a)->required();
  cmd_eq->add_option("expr2", expr_b)->required();

  CLI::App* cmd_normalize =
      app.add_subcommand("normalize", "print the invariants of an expression");
  cmd_normalize->add_option("expr", expr_a)->required();

  CLI::App* cmd_order = app.add_subcommand("order", "find the order of an element");
  cmd_order->add_option("expr", expr_a)->required();
  cmd_order->add_option("--max", max_order, "largest power to try");

  CLI::App* cmd_comm = app.add_subcommand("comm", "decide whether two expressions commute");
  cmd_comm->add_option("expr1", expr_a)->required();
  cmd_comm->add_option("expr2", expr_b)->required();

  CLI::App* cmd_lemma =
      app.add_subcommand("verify-lemma", "run the defining-relation suite");

  CLI::App* cmd_derivation =
      app.add_subcommand("verify-derivation", "replay a derivation trace file");
  cmd_derivation->add_option("file", trace_path, "trace file (defaults to the shipped one)");

  CLI::App* cmd_simulate =
      app.add_subcommand("simulate", "move the labeled samples and cross-check the label action");
  cmd_simulate->add_option("expr", expr_a)->required();
  cmd_simulate->add_option("--config", config_path, "geometry config file");
  cmd_simulate->add_option("--depth", depth_override, "ternary sample depth");
  cmd_simulate->add_option("--svg", svg_path, "write a before/after plot");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    fbraid::Word::set_length_cap(word_cap);
    fbraid::ModelOptions options;
    options.central_relation = !no_central_relation;
    fbraid::Model model(options);

    if (*cmd_eq) {
      fbraid::EqualityEvidence ev =
          model.equal_certified(eval_text(model, expr_a), eval_text(model, expr_b));
      nlohmann::ordered_json doc;
      doc["lhs"] = expr_a;
      doc["rhs"] = expr_b;
      doc["evidence"] = fbraid::evidence_to_json(ev);
      output.emit(doc);
      return ev.equal ? kExitOk : kExitFail;
    }

    if (*cmd_normalize) {
      fbraid::ModelElement e = eval_text(model, expr_a);
      nlohmann::ordered_json doc;
      doc["expression"] = expr_a;
      doc["framing"] = e.framing;
      doc["exponent_sum"] = fbraid::exponent_sum(e.braid);
      doc["permutation"] = fbraid::permutation(e.braid).cycles();
      doc["joint_invariant"] = model.joint_invariant(e);
      doc["label_action"] = fbraid::wedge_action_to_json(model.label_action(e));
      output.emit(doc);
      return kExitOk;
    }

    if (*cmd_order) {
      std::optional<int> order = model.element_order(eval_text(model, expr_a), max_order);
      nlohmann::ordered_json doc;
      doc["expression"] = expr_a;
      doc["max"] = max_order;
      if (order)
        doc["order"] = *order;
      else
        doc["order"] = nullptr;
      output.emit(doc);
      return order ? kExitOk : kExitFail;
    }

    if (*cmd_comm) {
      fbraid::ModelElement a = eval_text(model, expr_a);
      fbraid::ModelElement b = eval_text(model, expr_b);
      fbraid::ModelElement commutator =
          model.mul(model.mul(model.mul(a, b), model.inv(a)), model.inv(b));
      fbraid::EqualityEvidence ev = model.equal_certified(commutator, model.identity());
      nlohmann::ordered_json doc;
      doc["lhs"] = expr_a;
      doc["rhs"] = expr_b;
      doc["commute"] = ev.equal;
      doc["commutator_evidence"] = fbraid::evidence_to_json(ev);
      output.emit(doc);
      return ev.equal ? kExitOk : kExitFail;
    }

    if (*cmd_lemma) {
      fbraid::CheckReport report = model.verify_relations();
      output.emit(fbraid::report_to_json(report));
      return report.all_pass() ? kExitOk : kExitFail;
    }

    if (*cmd_derivation) {
      std::string path = trace_path.empty() ? default_trace_path() : trace_path;
      fbraid::DerivationTrace trace = fbraid::load_trace(path);
      fbraid::CheckReport report = fbraid::verify_derivation(model, trace);
      nlohmann::ordered_json doc = fbraid::report_to_json(report);
      doc["trace_file"] = path;
      output.emit(doc);
      return report.all_pass() ? kExitOk : kExitFail;
    }

    if (*cmd_simulate) {
      fbraid::geom::DiskConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
        nlohmann::json doc;
        in >> doc;
        cfg = fbraid::config_from_json(doc);
      }
      if (depth_override > 0) cfg.cantor_depth = depth_override;
      cfg.validate();

      fbraid::dsl::Expr expr = fbraid::dsl::parse(expr_a);
      std::vector<fbraid::geom::LabeledPoint> samples = fbraid::geom::build_samples(cfg);
      fbraid::geom::SampleMatch match = fbraid::geom::apply_expr_to_samples(cfg, expr, samples);
      fbraid::WedgeAction algebraic = model.label_action(fbraid::dsl::eval(expr, model));
      bool matches = match.labels_coherent && match.label_action == algebraic;

      nlohmann::ordered_json doc;
      doc["expression"] = expr_a;
      doc["depth"] = cfg.cantor_depth;
      doc["samples"] = samples.size();
      doc["bijective"] = match.bijective;
      doc["addresses_preserved"] = match.addresses_preserved;
      doc["labels_coherent"] = match.labels_coherent;
      doc["matches_algebra"] = matches;
      doc["algebraic_label_action"] = fbraid::wedge_action_to_json(algebraic);
      if (match.labels_coherent)
        doc["observed_label_action"] = fbraid::wedge_action_to_json(match.label_action);
      doc["detail"] = match.detail;

      if (!svg_path.empty()) {
        std::vector<fbraid::geom::LabeledPoint> after = samples;
        for (fbraid::geom::LabeledPoint& p : after)
          p.pos = fbraid::geom::eval_expr(cfg, expr, p.pos);
        fbraid::geom::write_svg(svg_path, cfg, samples, after);
        doc["svg"] = svg_path;
      }
      output.emit(doc);
      return matches ? kExitOk : kExitFail;
    }

    return kExitParse;
  } catch (const fbraid::WordCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const fbraid::dsl::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const fbraid::TraceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCap;
  }
}
