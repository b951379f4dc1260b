// tvs: construct, verify and bound total vertex irregular labelings.
//
// Exit codes: 0 success / irregular, 1 verification failure, 2 usage error,
// 3 search budget exceeded.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tvs/tvs.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tvs::FamilySpec family_spec(const std::string& name, std::size_t n,
                            const std::vector<std::size_t>& lengths) {
  const tvs::Family f = tvs::parse_family(name);
  if (f == tvs::Family::two_regular) {
    if (lengths.empty()) throw tvs::SpecError("two-regular needs --lengths");
    return tvs::FamilySpec::two_regular(lengths);
  }
  if (n == 0) throw tvs::SpecError(name + " needs --n");
  return tvs::FamilySpec::of(f, n);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

struct SweepRow {
  std::string param;
  tvs::label_t formula;
  tvs::label_t bound;
  tvs::label_t max_label;
  bool verified;

  bool ok() const { return verified && formula == bound && bound == max_label; }
};

SweepRow sweep_row(const tvs::FamilySpec& spec) {
  const tvs::ConstructionCertificate cert = tvs::construct(spec, tvs::CertificateCheck::skip);
  const tvs::VerificationReport r = tvs::verify(cert.graph, cert.labeling);
  return {spec.family == tvs::Family::two_regular ? join(spec.lengths) : std::to_string(spec.n),
          tvs::tvs_formula(spec), tvs::degree_count_bound(cert.graph).value, r.max_label_used,
          r.is_irregular};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total vertex irregularity strength toolkit"};
  app.require_subcommand(1);

  std::string family;
  std::size_t n = 0;
  std::vector<std::size_t> lengths;
  std::string graph_path, labeling_path;
  std::uint64_t max_nodes = tvs::SearchBudget{}.max_nodes;
  tvs::label_t max_k = 0;
  bool parallel = false;
  bool dot = false;
  std::size_t from = 0, to = 0;

  auto add_family = [&](CLI::App* cmd, bool lengths_opt) {
    cmd->add_option("--family", family, "cycle, path, prism, wheel, helm, friendship, complete, "
                                        "complete-bipartite, two-regular")
        ->required();
    cmd->add_option("--n", n, "family size parameter");
    if (lengths_opt) cmd->add_option("--lengths", lengths, "cycle lengths for two-regular")->delimiter(',');
  };

  auto* gen = app.add_subcommand("gen", "print a family graph as an edge list");
  add_family(gen, true);
  auto* label = app.add_subcommand("label", "construct an optimal labeling");
  add_family(label, true);
  label->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");
  auto* verify = app.add_subcommand("verify", "check a labeling against a graph");
  verify->add_option("--graph", graph_path)->required();
  verify->add_option("--labeling", labeling_path)->required();
  auto* bound = app.add_subcommand("bound", "lower bounds for a graph");
  bound->add_option("--graph", graph_path)->required();
  auto* exact = app.add_subcommand("exact", "exact tvs by exhaustive search");
  exact->add_option("--graph", graph_path)->required();
  exact->add_option("--max-nodes", max_nodes, "search node budget");
  exact->add_option("--max-k", max_k, "largest k to try (default: vertex count)");
  exact->add_flag("--parallel", parallel, "split the search across threads");
  auto* sweep = app.add_subcommand("sweep", "construct and check a parameter range");
  sweep->add_option("--family", family)->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      const tvs::FamilySpec spec = family_spec(family, n, lengths);
      std::cout << tvs::emit_edge_list(tvs::generate(spec).graph, spec.describe());
      return kOk;
    }
    if (*label) {
      const tvs::FamilySpec spec = family_spec(family, n, lengths);
      const tvs::ConstructionCertificate cert = tvs::construct(spec);
      if (dot) {
        std::cout << tvs::emit_dot(cert.graph, cert.labeling, tvs::generate(spec).order.roles);
      } else {
        std::cout << tvs::emit_labeling(cert);
      }
      return kOk;
    }
    if (*verify) {
      const tvs::Graph g = tvs::parse_edge_list(read_file(graph_path));
      const tvs::LabelingDocument doc = tvs::parse_labeling_document(read_file(labeling_path));
      const tvs::TotalLabeling lab = doc.labeling();
      if (lab.edge_labels.size() != g.size() || lab.vertex_labels.size() != g.order()) {
        std::cerr << "labeling does not match graph: " << lab.vertex_labels.size() << " vertex / "
                  << lab.edge_labels.size() << " edge labels for " << g.order() << " vertices / "
                  << g.size() << " edges\n";
        return kFailed;
      }
      const tvs::VerificationReport r = tvs::verify(g, lab);
      const auto weights = tvs::weight_profile(g, lab).weights;
      if (!doc.weights.empty() && doc.weights != weights) {
        std::cerr << "note: stored weights differ from recomputed weights\n";
      }
      const bool in_range = lab.within_bounds();
      std::cout << "is_irregular " << (r.is_irregular ? "true" : "false") << '\n'
                << "max_label_used " << r.max_label_used << '\n'
                << "declared_s " << lab.s << '\n'
                << "labels_within_s " << (in_range ? "true" : "false") << '\n'
                << "weight_range " << r.weight_range.first << ' ' << r.weight_range.second << '\n';
      if (r.duplicate_weight_witness) {
        std::cout << "duplicate_weight " << r.duplicate_weight_witness->first << ' '
                  << r.duplicate_weight_witness->second << '\n';
      }
      return r.is_irregular && in_range ? kOk : kFailed;
    }
    if (*bound) {
      const tvs::Graph g = tvs::parse_edge_list(read_file(graph_path));
      const tvs::BoundReport b = tvs::bounds(g);
      std::cout << "baca " << b.baca_bound << '\n'
                << "degree_count " << b.degree_count_bound << " (degree " << b.witness_degree << ")\n"
                << "best " << b.best << '\n';
      return kOk;
    }
    if (*exact) {
      const tvs::Graph g = tvs::parse_edge_list(read_file(graph_path));
      const tvs::OracleResult r = tvs::exact_tvs(
          g, {max_nodes, max_k}, parallel ? tvs::Execution::parallel : tvs::Execution::sequential);
      std::cout << "{\n  \"status\": \"" << tvs::to_string(r.status) << "\",\n  \"k\": " << r.k
                << ",\n  \"nodes\": " << r.nodes;
      if (r.witness) {
        std::string doc = tvs::emit_document(tvs::make_document(g, *r.witness));
        // indent the nested document
        std::string nested;
        for (char c : doc.substr(0, doc.size() - 1)) {
          nested += c;
          if (c == '\n') nested += "  ";
        }
        std::cout << ",\n  \"witness\": " << nested;
      }
      std::cout << "\n}\n";
      switch (r.status) {
        case tvs::OracleStatus::exact: return kOk;
        case tvs::OracleStatus::infeasible: return kFailed;
        case tvs::OracleStatus::budget_exceeded: return kBudget;
      }
    }
    if (*sweep) {
      const tvs::Family f = tvs::parse_family(family);
      std::vector<tvs::FamilySpec> specs;
      for (std::size_t k = from; k <= to; ++k) {
        if (f == tvs::Family::two_regular) {
          for (auto& p : tvs::partitions(k, 3, 4)) specs.push_back(tvs::FamilySpec::two_regular(p));
        } else {
          specs.push_back(tvs::FamilySpec::of(f, k));
        }
      }
      bool all_ok = true;
      std::cout << std::left << std::setw(14) << "n" << std::setw(9) << "formula" << std::setw(7)
                << "bound" << std::setw(11) << "max_label" << "verified\n";
      for (const auto& spec : specs) {
        const SweepRow row = sweep_row(spec);
        all_ok = all_ok && row.ok();
        std::cout << std::left << std::setw(14) << row.param << std::setw(9) << row.formula
                  << std::setw(7) << row.bound << std::setw(11) << row.max_label
                  << (row.verified ? "true" : "false") << (row.ok() ? "" : "  MISMATCH") << '\n';
      }
      return all_ok ? kOk : kFailed;
    }
  } catch (const tvs::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const tvs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const tvs::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
