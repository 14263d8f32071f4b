#include "bruhat/cli.hpp"

#include "bruhat/atlas.hpp"
#include "bruhat/bott_samelson.hpp"
#include "bruhat/fulton.hpp"
#include "bruhat/report_json.hpp"
#include "bruhat/wiring.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

namespace bruhat {

namespace {

constexpr int kMaxRankWithoutForce = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned threads_from_env() {
  if (const char* v = std::getenv("BRUHAT_THREADS")) {
    char* end = nullptr;
    long t = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && t > 0) return static_cast<unsigned>(t);
  }
  return 1;
}

void check_rank_guard(int n, bool force) {
  check_rank(n);
  if (n > kMaxRankWithoutForce && !force)
    throw UsageError("n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxRankWithoutForce) +
                     "; pass --force to run anyway");
}

Word checked_word(const std::string& text, int n) {
  Word w = parse_word(text);
  for (int a : w) check_label(a, n);
  return w;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_chart(std::ostream& out, const ChartReport& c) {
  out << "chart " << c.chart << "  word " << word_to_string(c.word) << "  length " << c.length
      << "  reduced " << yes_no(c.reduced) << "  " << (c.passes() ? "PASS" : "FAIL") << '\n';
  for (const auto& r : c.rows) {
    out << "  alpha " << r.alpha << ": generator "
        << (r.generator ? r.generator->to_string() : std::string("<not principal>"));
    if (r.closed_form_match) out << "  closed-form " << (*r.closed_form_match ? "match" : "MISMATCH");
    if (r.reversed_form_match)
      out << "  reversed-form " << (*r.reversed_form_match ? "match" : "differs");
    if (r.pullback) out << "  pullback " << r.pullback->to_string();
    if (r.divisors) {
      out << "  divisors {";
      for (std::size_t i = 0; i < r.divisors->divisors.size(); ++i)
        out << (i ? "," : "") << r.divisors->divisors[i].to_string();
      out << "} sign " << (r.divisors->sign > 0 ? "+1" : "-1");
    } else if (r.pullback) {
      out << "  divisors <none>";
    }
    out << '\n';
  }
  out << "  coverage " << yes_no(c.coverage) << "  coordinate change " << yes_no(c.coordinate_change)
      << '\n';
  for (const auto& f : c.failures) out << "  failure: " << f << '\n';
}

void write_json(const std::string& path, const nlohmann::ordered_json& j, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << j.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bruhat atlas verification for P^{2n-1} and SO(2n+2) Bott-Samelson cells", "bruhat"};
  app.require_subcommand(1, 1);

  int n = 0;
  bool force = false;
  auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--n", n, "rank n >= 2")->required();
    sub->add_flag("--force", force, "allow n > 8");
  };

  auto* verify = app.add_subcommand("verify", "verify all charts, or a single chart");
  add_rank(verify);
  int chart = 0;
  std::string json_path;
  verify->add_option("--chart", chart, "chart index 1..2n");
  verify->add_option("--json", json_path, "write the JSON report to PATH ('-' for stdout)");

  auto* words = app.add_subcommand("words", "list the distinguished words");
  add_rank(words);

  std::string word_text;
  auto* matrix = app.add_subcommand("matrix", "print the Bott-Samelson matrix of a word");
  add_rank(matrix);
  matrix->add_option("--word", word_text, "comma-separated node labels")->required();

  auto* minor_cmd = app.add_subcommand("minor", "compute a minor of the Bott-Samelson matrix");
  add_rank(minor_cmd);
  std::string rows_text, cols_text, method = "laplace";
  minor_cmd->add_option("--word", word_text, "comma-separated node labels")->required();
  minor_cmd->add_option("--rows", rows_text, "comma-separated 1-based rows")->required();
  minor_cmd->add_option("--cols", cols_text, "comma-separated 1-based columns")->required();
  minor_cmd->add_option("--method", method, "lgv or laplace")
      ->check(CLI::IsMember({"lgv", "laplace"}));

  auto* diagram = app.add_subcommand("diagram", "render the wiring diagram of a word");
  add_rank(diagram);
  bool inverse_flag = false, flip_flag = false;
  std::string format, out_path;
  diagram->add_option("--word", word_text, "comma-separated node labels")->required();
  diagram->add_flag("--inverse", inverse_flag, "render the inverse diagram");
  diagram->add_flag("--flip", flip_flag, "render the flipped diagram (applied before --inverse)");
  diagram->add_option("--format", format, "svg or tikz")
      ->required()
      ->check(CLI::IsMember({"svg", "tikz"}));
  diagram->add_option("--out", out_path, "output file ('-' for stdout)")->required();

  auto* essential = app.add_subcommand("essential", "essential set of r_alpha");
  add_rank(essential);
  int alpha = 0;
  essential->add_option("--alpha", alpha, "node label 0..n")->required();

  std::vector<std::string> argv_storage{"bruhat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*verify) {
      check_rank_guard(n, force);
      if (chart != 0) {
        const ChartReport report = verify_chart(chart, n);
        print_chart(out, report);
        if (!json_path.empty()) write_json(json_path, to_json(report), out);
        return report.passes() ? 0 : 1;
      }
      const AtlasReport report = verify_atlas(n, threads_from_env());
      out << "n = " << n << '\n';
      for (const auto& c : report.charts) print_chart(out, c);
      out << "inverse pairs " << yes_no(report.inverse_pairs) << "  distinct cells "
          << yes_no(report.distinct_cells) << '\n';
      for (const auto& f : report.failures) out << "failure: " << f << '\n';
      out << "atlas " << (report.pass ? "PASS" : "FAIL") << " (" << report.charts.size()
          << " charts)\n";
      if (!json_path.empty()) write_json(json_path, to_json(report), out);
      return report.pass ? 0 : 1;
    }
    if (*words) {
      check_rank_guard(n, force);
      for (int l = 1; l <= 2 * n; ++l) {
        const Word w = distinguished_word(l, n);
        out << "Q" << l << " = " << word_to_string(w) << "  length "
            << length(product(w, n)) << "  reduced " << yes_no(is_reduced(w, n));
        if (l >= 4 && l % 2 == 0) {
          const bool inv = product(w, n) == inverse(product(distinguished_word(l - 1, n), n));
          out << "  inverse of Q" << l - 1 << " " << yes_no(inv);
        }
        out << '\n';
      }
      return 0;
    }
    if (*matrix) {
      check_rank_guard(n, force);
      out << bott_samelson_matrix(checked_word(word_text, n), n).to_string();
      return 0;
    }
    if (*minor_cmd) {
      check_rank_guard(n, force);
      const Word w = checked_word(word_text, n);
      const IndexTuple rows = parse_index_tuple(rows_text);
      const IndexTuple cols = parse_index_tuple(cols_text);
      const Polynomial value = method == "lgv" ? lgv_minor(diagram_of_word(w, n), rows, cols)
                                               : minor(bott_samelson_matrix(w, n), rows, cols);
      out << value.to_string() << '\n';
      return 0;
    }
    if (*diagram) {
      check_rank_guard(n, force);
      WiringDiagram d = diagram_of_word(checked_word(word_text, n), n);
      if (flip_flag) d = flip(d);
      if (inverse_flag) d = inverse_diagram(d);
      const std::string text = render(d, parse_render_format(format));
      if (out_path == "-") {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot open " + out_path + " for writing");
        f << text;
      }
      return 0;
    }
    if (*essential) {
      check_rank_guard(n, force);
      const auto pi = PermutationMatrixView::of(simple_reflection(alpha, n));
      out << "r" << alpha << " one-line:";
      for (int i = 1; i <= pi.size(); ++i) out << ' ' << pi(i);
      out << '\n';
      for (const auto& c : essential_set(pi))
        out << "(" << c.row << "," << c.col << ") m=" << c.rank << "  minors of size "
            << c.rank + 1 << " in the northwest " << c.row << "x" << c.col << " block\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace bruhat
