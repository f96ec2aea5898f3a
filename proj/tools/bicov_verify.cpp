#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bicov/relations.hpp"
#include "bicov/semiclassical.hpp"
#include "bicov/verifier.hpp"

using namespace bicov;

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream in(item);
    std::string part;
    while (std::getline(in, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

RelationSet relation_set(const RMatrixData& rm, const std::string& name) {
  if (name == "w19c") return relations_woronowicz(rm);
  if (name == "rel1") return relations_rel1(rm);
  if (name == "w22") return relations_unique(rm);
  if (name == "wat") return relations_watamura(rm);
  if (name == "weighted") return relations_weighted_sum(rm);
  throw std::invalid_argument("unknown relation set: " + name);
}

std::string tensor_dump(const GroupData& g, const std::string& name) {
  if (name == "metric") return g.metric.dump();
  if (name == "k0") return k0_tensor(g).dump();
  if (name == "standard-r") return standard_r(g).r.dump();
  if (name == "abelian-r") return abelian_r(g).r.dump();
  auto rm = build_rmatrix(g);
  if (name == "rhat") return rm.rhat.dump();
  if (name == "k") return rm.k.dump();
  if (name == "cq") return rm.cq.dump();
  if (name == "p-plus") return rm.p_plus_num.dump();
  if (name == "p-minus") return rm.p_minus_num.dump();
  if (name == "p-zero") return rm.p_zero_num.dump();
  auto sd = semiclassical_expand(rm);
  if (name == "r-tilde") return sd.r_tilde.dump();
  if (name == "r") return sd.r.dump();
  if (name == "k1") return sd.k1.dump();
  if (name == "fgf") return fgf_bracket(sd).to_tensor().dump();
  throw std::invalid_argument("unknown tensor: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of graded bicovariant brackets and quantum relation sets"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run verification suites");
  std::string group_pos, group_opt, mode, preset, format, out, config_path;
  std::vector<std::string> suites, seeds, qs, params;
  int degree = 0;
  bool timing = false;
  run_cmd->add_option("group_tag", group_pos, "so5, so7, sp4, sp6");
  run_cmd->add_option("--group", group_opt, "Group tag");
  run_cmd->add_option("--suites", suites, "classical,differential,jacobi,quantum,semiclassical,pbw");
  run_cmd->add_option("--mode", mode, "symbolic or randomized");
  run_cmd->add_option("--seed", seeds, "Seed list");
  run_cmd->add_option("--q", qs, "Rational q samples");
  run_cmd->add_option("--degree", degree, "PBW probe degree (2 or 3)");
  run_cmd->add_option("--preset", preset, "A1i, A1ii, A1iii, A2, A3");
  run_cmd->add_option("--params", params, "key=val,... (val rational or free)");
  run_cmd->add_option("--format", format, "json or markdown");
  run_cmd->add_option("--out", out, "Output file (default stdout)");
  run_cmd->add_option("--config", config_path, "key = value configuration file");
  run_cmd->add_flag("--timing", timing, "Include wall times (output no longer byte-stable)");

  auto* rel_cmd = app.add_subcommand("export-relations", "Print a relation set");
  std::string rel_group, rel_name = "w22", rel_out;
  rel_cmd->add_option("group_tag", rel_group)->required();
  rel_cmd->add_option("--set", rel_name, "w19c, rel1, w22, wat, weighted");
  rel_cmd->add_option("--out", rel_out);

  auto* dump_cmd = app.add_subcommand("dump-tensor", "Print a tensor, one entry per line");
  std::string dump_group, dump_name = "rhat", dump_out;
  dump_cmd->add_option("group_tag", dump_group)->required();
  dump_cmd->add_option("--tensor", dump_name,
                       "metric, k0, standard-r, abelian-r, rhat, k, cq, p-plus, p-minus, p-zero, r-tilde, r, k1, fgf");
  dump_cmd->add_option("--out", dump_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rel_cmd) {
      auto rm = build_rmatrix(group_from_tag(rel_group));
      emit(export_relations(relation_set(rm, rel_name)), rel_out);
      return 0;
    }
    if (*dump_cmd) {
      emit(tensor_dump(group_from_tag(dump_group), dump_name), dump_out);
      return 0;
    }

    RunConfig c;
    if (!config_path.empty()) apply_config_text(c, read_file(config_path));
    if (!group_pos.empty() && !group_opt.empty() && group_pos != group_opt)
      throw std::invalid_argument("conflicting group tags");
    if (!group_opt.empty()) c.group = group_opt;
    if (!group_pos.empty()) c.group = group_pos;
    if (!suites.empty()) c.suites = split_list(suites);
    if (!mode.empty()) c.mode = parse_mode(mode);
    if (!seeds.empty()) {
      c.seeds.clear();
      for (const auto& s : split_list(seeds)) c.seeds.push_back(std::stoull(s));
    }
    if (!qs.empty()) {
      c.q_samples.clear();
      for (const auto& s : split_list(qs)) c.q_samples.push_back(parse_rational(s));
    }
    if (degree) c.degree = degree;
    if (!preset.empty()) c.preset = preset;
    for (const auto& p : params) apply_params_text(c, p);
    if (!format.empty()) c.format = format;
    c.timing = timing;
    if (c.suites.empty()) c.suites = suite_names();
    validate(c);
    group_from_tag(c.group);

    auto report = run(c);
    emit(render(report, c.format), out);
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
