// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "orbsplice/orbsplice.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

using GraphPtr = std::unique_ptr<osq_graph, decltype(&osq_graph_free)>;

struct Owned {
  char* text = nullptr;
  ~Owned() { osq_string_free(text); }
};

int exit_for(osq_status s) { return s == OSQ_ERR_CONDITIONS_FAIL ? kExitCheckFailed : kExitInputError; }

int report_error(osq_status s) {
  std::cerr << "error: " << osq_status_name(s) << ": " << osq_last_error() << "\n";
  return exit_for(s);
}

GraphPtr load(const std::string& path, osq_status& status) {
  osq_graph* g = nullptr;
  status = osq_graph_load(path.c_str(), &g);
  return GraphPtr(g, osq_graph_free);
}

// Loads the graph, runs a report producing text, prints it and maps the verdict to an exit code.
int run(const std::string& path, const std::function<osq_status(const osq_graph*, char**, int*)>& body) {
  osq_status s;
  GraphPtr g = load(path, s);
  if (s != OSQ_OK) return report_error(s);
  Owned out;
  int passed = 1;
  s = body(g.get(), &out.text, &passed);
  if (s != OSQ_OK) return report_error(s);
  std::cout << out.text;
  return passed ? kExitOk : kExitCheckFailed;
}

struct ReportResult {
  std::string text;
  int code = kExitOk;
  std::string error;
};

ReportResult report_one(const std::string& path, osq_format fmt) {
  ReportResult r;
  osq_status s;
  GraphPtr g = load(path, s);
  if (s == OSQ_OK) {
    Owned out;
    int passed = 1;
    const std::string name = std::filesystem::path(path).stem().string();
    s = osq_invariant_report(name.c_str(), g.get(), fmt, &out.text, &passed);
    if (s == OSQ_OK) {
      r.text = out.text;
      r.code = passed ? kExitOk : kExitCheckFailed;
      return r;
    }
  }
  r.code = exit_for(s);
  r.error = path + ": " + osq_status_name(s) + ": " + osq_last_error();
  return r;
}

int run_reports(const std::vector<std::string>& files, osq_format fmt, unsigned jobs) {
  std::vector<ReportResult> results(files.size());
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < files.size(); start += jobs) {
    std::vector<std::future<ReportResult>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, report_one, files[i], fmt));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  int code = kExitOk;
  std::vector<std::string> texts;
  for (const auto& r : results) {
    if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
    else texts.push_back(r.text);
    code = std::max(code, r.code);
  }
  if (fmt == OSQ_FORMAT_JSON) {
    std::cout << "[\n";
    for (std::size_t i = 0; i < texts.size(); ++i) {
      std::string t = texts[i];
      while (!t.empty() && t.back() == '\n') t.pop_back();
      std::cout << t << (i + 1 < texts.size() ? ",\n" : "\n");
    }
    std::cout << "]\n";
  } else {
    for (const auto& t : texts) std::cout << t;
  }
  return code;
}

// Prints a transformed graph in the graph file format (or JSON).
int emit_graph(osq_status s, osq_graph* raw, osq_format fmt) {
  GraphPtr g(raw, osq_graph_free);
  if (s != OSQ_OK) return report_error(s);
  Owned out;
  s = osq_graph_format(g.get(), fmt, &out.text);
  if (s != OSQ_OK) return report_error(s);
  std::cout << out.text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of decorated plumbing graphs: discriminant and orbifold homology groups, diagonal "
               "representations, splice diagrams and splice equations."};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::string file;
  auto graph_arg = [&](CLI::App* sub) { sub->add_option("graph", file, "Graph file")->required(); };

  auto* validate = app.add_subcommand("validate", "Tree, negative definiteness and quasi-minimality checks");
  graph_arg(validate);

  bool orbifold = false;
  auto* homology = app.add_subcommand("homology", "Discriminant group, or orbifold homology with --orbifold");
  graph_arg(homology);
  homology->add_flag("--orbifold", orbifold, "Use the orbifold weights");

  auto* linking = app.add_subcommand("linking", "Linking matrix -(intersection matrix)^-1");
  graph_arg(linking);

  auto* rep = app.add_subcommand("rep", "Diagonal representation on the leaf coordinates");
  graph_arg(rep);
  rep->add_flag("--orbifold", orbifold, "Represent the orbifold group");

  bool check_semigroup = false, check_congruence = false;
  auto* splice = app.add_subcommand("splice", "Splice diagram and its conditions");
  graph_arg(splice);
  splice->add_flag("--check-semigroup", check_semigroup, "Check the semigroup condition");
  splice->add_flag("--check-congruence", check_congruence, "Check the congruence condition");

  bool substitute = false;
  std::size_t cap = 0;
  auto* equations = app.add_subcommand("equations", "Splice diagram equations");
  graph_arg(equations);
  equations->add_flag("--substitute", substitute, "Substitute x_w = z_w^n_w");
  equations->add_option("--cap", cap, "Admissible monomials enumerated per edge")->check(CLI::PositiveNumber);

  std::string free_vertex;
  std::vector<std::string> edge;
  auto* blowup = app.add_subcommand("blowup", "Blow up a point on a curve or an intersection point");
  graph_arg(blowup);
  auto* point = blowup->add_option_group("point", "Where to blow up");
  point->add_option("--free", free_vertex, "Blow up a free point on V");
  point->add_option("--edge", edge, "Blow up the intersection of V and W")->expected(2)->allow_extra_args(false);
  point->require_option(1);

  std::string down_vertex;
  auto* blowdown = app.add_subcommand("blowdown", "Blow down a -1 vertex of valence at most two");
  graph_arg(blowdown);
  blowdown->add_option("vertex", down_vertex, "Vertex to contract")->required();

  bool render_splice = false;
  std::string format = "dot";
  auto* render = app.add_subcommand("render", "Graphviz DOT text of the graph or its splice diagram");
  graph_arg(render);
  render->add_flag("--splice", render_splice, "Render the splice diagram");
  render->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot"}));

  std::vector<std::string> files;
  unsigned jobs = 1;
  auto* report = app.add_subcommand("report", "Invariant report for each graph file");
  report->add_option("graphs", files, "Graph files")->required();
  report->add_option("-j,--jobs", jobs, "Files processed concurrently")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const osq_format fmt = json ? OSQ_FORMAT_JSON : OSQ_FORMAT_TEXT;

  if (*validate)
    return run(file, [&](const osq_graph* g, char** out, int* passed) { return osq_validate(g, fmt, out, passed); });
  if (*homology)
    return run(file, [&](const osq_graph* g, char** out, int* passed) {
      return osq_homology(g, orbifold, fmt, out, passed);
    });
  if (*linking)
    return run(file, [&](const osq_graph* g, char** out, int*) { return osq_linking(g, fmt, out); });
  if (*rep)
    return run(file, [&](const osq_graph* g, char** out, int* passed) { return osq_rep(g, orbifold, fmt, out, passed); });
  if (*splice)
    return run(file, [&](const osq_graph* g, char** out, int* passed) {
      return osq_splice(g, check_semigroup, check_congruence, fmt, out, passed);
    });
  if (*equations)
    return run(file, [&](const osq_graph* g, char** out, int* passed) {
      return osq_equations(g, substitute, cap, fmt, out, passed);
    });
  if (*render)
    return run(file, [&](const osq_graph* g, char** out, int*) { return osq_render_dot(g, render_splice, out); });
  if (*report) return run_reports(files, fmt, jobs);

  osq_status s;
  GraphPtr g = load(file, s);
  if (s != OSQ_OK) return report_error(s);
  osq_graph* result = nullptr;
  if (*blowup) {
    s = edge.empty() ? osq_graph_blow_up_free(g.get(), free_vertex.c_str(), &result)
                     : osq_graph_blow_up_edge(g.get(), edge[0].c_str(), edge[1].c_str(), &result);
  } else {
    s = osq_graph_blow_down(g.get(), down_vertex.c_str(), &result);
  }
  return emit_graph(s, result, fmt);
}
