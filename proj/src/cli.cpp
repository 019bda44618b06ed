#include "perfcode/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "perfcode/constructions.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/io.hpp"

namespace perfcode {

namespace {

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw MalformedInput("cannot write " + path);
  f << contents;
  if (!f) throw MalformedInput("failed writing " + path);
}

PointPerm load_tau(const std::string& path) {
  PointPerm tau = parse_tau_json(read_file(path));
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  return tau;
}

Budget budget_or_env(double seconds) { return seconds > 0 ? Budget::seconds(seconds) : Budget::from_env(); }

std::string yes(bool b) { return b ? "true" : "false"; }

int log2_exact(int v, const char* name) {
  if (v < 2 || !std::has_single_bit(static_cast<unsigned>(v))) throw MalformedInput(std::string(name) + " must be a power of two >= 2");
  return std::countr_zero(static_cast<unsigned>(v));
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended perfect codes S_tau and their Steiner quadruple systems"};
  app.require_subcommand(1);

  int r = 0;
  int t = 0;
  int m = 0;
  unsigned parallel = 1;
  double budget_seconds = 0;
  std::string tau_path;
  std::string in_path;
  std::string out_path;
  std::string catalog_path;
  std::string format = "json";
  bool materialize = false;
  int kernel_filter = -1;

  auto* hamming = app.add_subcommand("hamming", "Extended Hamming code of length 2^r");
  hamming->add_option("--r", r)->required();
  hamming->add_option("--out", out_path)->required();

  auto* build = app.add_subcommand("build-stau", "S_tau as cosets of H x H");
  build->add_option("--tau", tau_path)->required();
  build->add_option("--out", out_path)->required();
  build->add_flag("--materialize", materialize, "Write every codeword");

  auto* sqs = app.add_subcommand("sqs", "Steiner quadruple system of S_tau");
  sqs->add_option("--tau", tau_path)->required();
  sqs->add_option("--out", out_path)->required();

  auto* check = app.add_subcommand("check-sqs", "Validate an SQS file");
  check->add_option("--in", in_path)->required();

  auto* stats = app.add_subcommand("stats", "Rank, kernel and sizes of S_tau");
  stats->add_option("--tau", tau_path)->required();

  auto* enum_regular = app.add_subcommand("enum-regular", "Regular subgroups of GA(r,2)");
  enum_regular->add_option("--r", r)->required();
  enum_regular->add_option("--budget-seconds", budget_seconds);
  enum_regular->add_option("--out", out_path)->required();

  auto* catalog = app.add_subcommand("catalog-taus", "Permutations induced by automorphisms of regular subgroups");
  catalog->add_option("--r", r)->required();
  catalog->add_option("--budget-seconds", budget_seconds);
  catalog->add_option("--out", out_path)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Isomorphism classes of a catalog");
  classify_cmd->add_option("--catalog", catalog_path)->required();
  classify_cmd->add_option("--out", out_path)->required();
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  classify_cmd->add_option("--parallel", parallel)->check(CLI::PositiveNumber);
  classify_cmd->add_option("--kernel-dim", kernel_filter, "Keep only entries of this kernel dimension");
  classify_cmd->add_option("--budget-seconds", budget_seconds);

  auto* report = app.add_subcommand("report", "Transitivity report for tau");
  report->add_option("--tau", tau_path)->required();

  auto* series = app.add_subcommand("series", "Neighbor transitive non-Mollard code of length 2^{r+1}");
  series->add_option("--r", r)->required();

  auto* hadamard = app.add_subcommand("hadamard", "Hadamard analog A_tau");
  hadamard->add_option("--tau", tau_path)->required();
  hadamard->add_option("--out", out_path)->required();

  auto* mollard_cmd = app.add_subcommand("mollard", "Mollard code from two extended Hamming codes, phi = 0");
  mollard_cmd->add_option("--t", t)->required();
  mollard_cmd->add_option("--m", m)->required();
  mollard_cmd->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformedInput;
  }

  try {
    std::ostringstream buffer;
    if (hamming->parsed()) {
      write_code(buffer, extended_hamming(r));
      write_file(out_path, buffer.str());
    } else if (build->parsed()) {
      const PointPerm tau = load_tau(tau_path);
      const CosetUnionCode s = build_s_tau(tau);
      if (materialize) {
        write_code(buffer, explicit_materialize(s));
      } else {
        write_code(buffer, s);
      }
      write_file(out_path, buffer.str());
    } else if (sqs->parsed()) {
      const Sqs q = sqs_from_tau(load_tau(tau_path));
      write_sqs(buffer, q);
      write_file(out_path, buffer.str());
      out << "v=" << q.order() << " b=" << q.size() << '\n';
    } else if (check->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw MalformedInput("cannot open " + in_path);
      bool mismatch = false;
      const Sqs q = read_sqs(in, mismatch);
      if (const auto bad = validate_sqs(q)) {
        out << "v=" << q.order() << " b=" << q.size() << " violation " << (*bad)[0] << ' ' << (*bad)[1] << ' '
            << (*bad)[2] << '\n';
        return kValidationFailure;
      }
      if (mismatch) {
        out << "v=" << q.order() << " b=" << q.size() << " header count differs\n";
        return kValidationFailure;
      }
      out << "v=" << q.order() << " b=" << q.size() << " valid\n";
    } else if (stats->parsed()) {
      const PointPerm tau = load_tau(tau_path);
      const CodeStats s = stats_from_tau(tau);
      out << "rank=" << s.rank << "\nkernel_dim=" << s.kernel_dim << "\nmin_distance=" << s.min_distance
          << "\nlog2_size=" << ((2 << tau.dim()) - tau.dim() - 2) << "\nintersection_dim=" << intersection_dim(tau)
          << '\n';
    } else if (enum_regular->parsed()) {
      const auto result = enumerate_regular_subgroups(r, budget_or_env(budget_seconds));
      write_groups(buffer, result.groups);
      write_file(out_path, buffer.str());
      out << "groups=" << result.groups.size() << " complete=" << yes(result.complete) << '\n';
      if (!result.complete) return kBudgetExhausted;
    } else if (catalog->parsed()) {
      const TauCatalog c = catalog_taus(r, budget_or_env(budget_seconds));
      write_catalog(buffer, c);
      write_file(out_path, buffer.str());
      out << "groups=" << c.groups << " pairs=" << c.pairs << " taus=" << c.entries.size()
          << " complete=" << yes(c.complete) << '\n';
      if (!c.complete) return kBudgetExhausted;
    } else if (classify_cmd->parsed()) {
      std::ifstream in(catalog_path);
      if (!in) throw MalformedInput("cannot open " + catalog_path);
      std::vector<TaggedTau> taus = read_catalog(in);
      if (kernel_filter >= 0)
        std::erase_if(taus, [&](const TaggedTau& x) { return stats_from_tau(x.tau).kernel_dim != kernel_filter; });
      const auto entries = classify(taus, {parallel, budget_or_env(budget_seconds)});
      if (format == "csv") {
        write_entries_csv(buffer, entries);
      } else {
        write_entries_json(buffer, entries);
      }
      write_file(out_path, buffer.str());
      std::uint32_t classes = 0;
      for (const auto& e : entries) classes = std::max(classes, e.class_id + 1);
      out << "entries=" << entries.size() << " classes=" << classes << '\n';
    } else if (report->parsed()) {
      const PointPerm tau = load_tau(tau_path);
      TaggedTau tagged{tau, Provenance::user()};
      if (tau.dim() <= 4) {
        if (auto p = find_inducing_automorphism(tau, Budget::from_env())) tagged.provenance = *p;
      }
      const TransitivityReport rep = transitivity_report(tagged);
      out << "tau=" << tau.id() << "\nprovenance=" << tagged.provenance.to_string()
          << "\ncoordinate_transitive=" << yes(rep.coordinate_transitive)
          << "\ntransitive=" << (rep.transitive_verified ? "verified" : "unverified")
          << "\nneighbor_transitive=" << yes(rep.neighbor_transitive) << "\nreason=" << rep.reason << '\n';
    } else if (series->parsed()) {
      const SeriesMember s = series_theorem7(r);
      std::string parts;
      for (const int p : s.parts) parts += (parts.empty() ? "" : "+") + std::to_string(p);
      out << "r=" << r << "\nparts=" << parts << "\ntau=" << s.tau.id() << "\nrank=" << s.entry.rank
          << "\nkernel_dim=" << s.entry.kernel_dim << "\npoint_transitive=" << yes(s.entry.point_transitive)
          << "\nneighbor_transitive=" << yes(s.report.neighbor_transitive)
          << "\nnon_mollard=" << (s.entry.non_mollard ? "true" : "unknown") << '\n';
    } else if (hadamard->parsed()) {
      const HadamardCode h = hadamard_a_tau(load_tau(tau_path));
      write_code(buffer, h.words);
      write_file(out_path, buffer.str());
      out << "n=" << h.words.length() << " words=" << h.words.size() << " min_distance=" << brute_min_distance(h.words)
          << '\n';
    } else if (mollard_cmd->parsed()) {
      const ExplicitCode c = explicit_materialize(extended_hamming(log2_exact(t, "t")));
      const ExplicitCode d = explicit_materialize(extended_hamming(log2_exact(m, "m")));
      const ExplicitCode words = mollard(c, d).materialize();
      write_code(buffer, words);
      write_file(out_path, buffer.str());
      out << "n=" << words.length() << " words=" << words.size() << '\n';
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const ExcludedLength& e) {
    err << e.what() << '\n';
    return kValidationFailure;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const ZeroNotFixed& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const DimensionMismatch& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kValidationFailure;
  }
  return kOk;
}

}  // namespace perfcode
