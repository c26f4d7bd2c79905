#include "hangwire/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hangwire/construct.hpp"
#include "hangwire/render.hpp"
#include "hangwire/search.hpp"
#include "hangwire/serialize.hpp"

namespace hangwire {

namespace {

Spec resolve_puzzle(const std::string& text, const std::string& convention) {
  if (text.find('@') != std::string::npos) return parse_spec(text);
  if (convention == "wastlund") return parse_spec(text + "@wastlund");
  return parse_spec(text);
}

std::string verdict_line(const Verdict& v) {
  std::string mode = v.mode == CheckMode::full ? "full" : "essential";
  if (v.ok) return "ok (" + mode + ")";
  std::string s = "counterexample: remove {";
  bool first = true;
  for (int j : v.counterexample.to_vector()) {
    if (!first) s += ",";
    s += std::to_string(j);
    first = false;
  }
  s += "} expected ";
  s += v.expected_fall ? "fall" : "hang";
  s += ", got ";
  s += v.got.empty() ? "0" : format_word(v.got);
  return s;
}

void print_report(const ConstructionReport& r, bool json, std::ostream& out) {
  if (json) {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << "method: " << r.method << "\n";
  out << "puzzle: " << r.k << "-of-" << r.n << "\n";
  out << "word: " << (r.word.empty() ? "0" : format_word(r.word)) << "\n";
  out << "unreduced: " << r.unreduced << "\n";
  out << "reduced: " << r.reduced << "\n";
  out << "verdict: " << (r.verdict ? verdict_line(*r.verdict) : "skipped")
      << "\n";
}

ConstructionReport basic_report(const std::string& method, int k, int n,
                                ExprPtr e, bool verify) {
  ConstructionReport r;
  r.method = method;
  r.k = k;
  r.n = n;
  r.expr = std::move(e);
  Flattened flat = flatten(r.expr);
  r.word = std::move(flat.word);
  r.unreduced = flat.symbol_count;
  r.reduced = r.word.length();
  if (verify)
    r.verdict = solves(r.word, Spec::threshold(k, n),
                       n <= 10 ? CheckMode::full : CheckMode::essential);
  return r;
}

int report_status(const ConstructionReport& r) {
  return r.verdict && !r.verdict->ok ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"picture-hanging puzzle words: construct, check, and search"};
  app.require_subcommand(1);

  std::string puzzle, method = "split", convention = "demaine", word_text;
  std::string catalog_name, out_path;
  bool json = false, no_verify = false, allow_long = false;
  int exact_len = -1, max_len = -1, shards = 1, shard_id = 0, threads = 1;
  int table_k = 2, table_max_i = 10;
  std::string check_mode = "full";

  auto* construct =
      app.add_subcommand("construct", "build a solution for a puzzle");
  construct->add_option("--puzzle", puzzle, "puzzle as K-of-N[@convention]")
      ->required();
  construct->add_option("--method", method,
                        "split|wastlund|extension|chain|chain-updown|balanced");
  construct->add_option("--convention", convention, "demaine|wastlund")
      ->check(CLI::IsMember({"demaine", "wastlund"}));
  construct->add_flag("--no-verify", no_verify, "skip the solves check");
  construct->add_flag("--json", json, "emit one JSON record");

  auto* check = app.add_subcommand("check", "verify a word against a puzzle");
  check->add_option("--word", word_text, "word, e.g. 1+2-1-2")->required();
  check->add_option("--puzzle", puzzle, "puzzle as K-of-N[@convention]")
      ->required();
  check->add_option("--convention", convention, "demaine|wastlund")
      ->check(CLI::IsMember({"demaine", "wastlund"}));
  check->add_option("--mode", check_mode, "full|essential")
      ->check(CLI::IsMember({"full", "essential"}));
  check->add_flag("--json", json, "emit one JSON record");

  auto* canon = app.add_subcommand("canon", "canonical symmetry-class form");
  canon->add_option("--word", word_text, "word to canonicalize")->required();
  canon->add_flag("--json", json, "emit one JSON record");

  auto* search = app.add_subcommand("search", "exhaustive minimum search");
  search->add_option("--puzzle", puzzle, "puzzle as K-of-N[@convention]")
      ->required();
  auto* exact_opt =
      search->add_option("--exact-len", exact_len, "search one length");
  auto* max_opt =
      search->add_option("--max-len", max_len, "ascend lengths up to this");
  exact_opt->excludes(max_opt);
  max_opt->excludes(exact_opt);
  search->add_option("--convention", convention, "demaine|wastlund")
      ->check(CLI::IsMember({"demaine", "wastlund"}));
  search->add_option("--shards", shards, "prefix-partition cell count");
  search->add_option("--shard-id", shard_id, "cell to run (0-based)");
  search->add_option("--threads", threads, "worker threads");
  search->add_flag("--long", allow_long, "allow runs at length >= 14");
  search->add_flag("--json", json, "emit one JSON record");

  auto* table = app.add_subcommand("table", "unreduced split-length table");
  table->add_option("--k", table_k, "threshold k")->required();
  table->add_option("--max-i", table_max_i, "largest i for n = 2^i");
  table->add_flag("--json", json, "emit one JSON record");

  auto* catalog =
      app.add_subcommand("catalog", "named 2-of-4 exhibits");
  catalog->add_option("name", catalog_name, "entry name (omit to list)");
  catalog->add_flag("--json", json, "emit one JSON record");

  auto* render = app.add_subcommand("render", "SVG wire diagram for a word");
  render->add_option("--word", word_text, "word to draw")->required();
  render->add_option("--out", out_path, "output file (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("hangwire");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(construct)) {
      Spec f = resolve_puzzle(puzzle, convention);
      int k = f.demaine_k(), n = f.nails();
      VerifyMode verify =
          no_verify ? VerifyMode::none : VerifyMode::automatic;
      ConstructionReport r;
      if (method == "split") {
        r = demaine_split(k, n, verify);
      } else if (method == "wastlund") {
        if (k != n - 2)
          throw std::invalid_argument(
              "method wastlund builds (n-2)-of-n puzzles");
        r = wastlund_corank2(n, verify);
      } else if (method == "extension") {
        r = extension_construct(k, n, verify);
      } else if (method == "chain") {
        if (k != n)
          throw std::invalid_argument("method chain builds n-of-n puzzles");
        std::vector<int> nails(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) nails[static_cast<size_t>(i)] = i + 1;
        r = basic_report("chain", k, n, chain_expr(nails), !no_verify);
      } else if (method == "chain-updown") {
        if (k != n - 1)
          throw std::invalid_argument(
              "method chain-updown builds (n-1)-of-n puzzles");
        std::vector<int> nails(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) nails[static_cast<size_t>(i)] = i + 1;
        r = basic_report("chain-updown", k, n, chain_updown_expr(nails),
                         !no_verify);
      } else if (method == "balanced") {
        if (k != 1)
          throw std::invalid_argument("method balanced builds 1-of-n puzzles");
        std::vector<int> nails(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) nails[static_cast<size_t>(i)] = i + 1;
        r = basic_report("balanced", k, n, balanced_k1(nails), !no_verify);
      } else {
        throw std::invalid_argument("unknown method '" + method + "'");
      }
      print_report(r, json, out);
      return report_status(r);
    }

    if (app.got_subcommand(check)) {
      Spec f = resolve_puzzle(puzzle, convention);
      Word w = parse_word(word_text);
      Verdict v = solves(
          w, f, check_mode == "full" ? CheckMode::full : CheckMode::essential);
      if (json) {
        Json j = to_json(v);
        j["word"] = format_word(w);
        j["puzzle"] = f.text();
        out << j.dump() << "\n";
      } else {
        out << verdict_line(v) << "\n";
      }
      return v.ok ? 0 : 1;
    }

    if (app.got_subcommand(canon)) {
      Word w = parse_word(word_text);
      CanonicalWord c = canonical_form(w);
      if (json) {
        Json j;
        j["word"] = format_word(w);
        j["canonical"] = format_word(c.word);
        j["nails"] = c.nails;
        out << j.dump() << "\n";
      } else {
        out << format_word(c.word) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(search)) {
      Spec f = resolve_puzzle(puzzle, convention);
      if (exact_len < 0 && max_len < 0)
        throw std::invalid_argument("search needs --exact-len or --max-len");
      SearchOptions options;
      options.shards = shards;
      options.shard_id = shard_id;
      options.threads = threads;
      options.allow_long = allow_long;
      options.progress = [&err](std::uint64_t nodes) {
        err << "progress: " << nodes << " nodes\n";
      };
      if (exact_len >= 0) {
        SearchOutcome o = search_length(f, exact_len, options);
        if (json) {
          out << to_json(o).dump() << "\n";
        } else {
          out << "spec: " << o.spec << "\n";
          out << "length: " << o.length << "\n";
          out << "solutions (" << o.solutions.size() << "):\n";
          for (const auto& s : o.solutions)
            out << "  " << format_word(s.word) << "\n";
          out << "nodes: " << o.nodes << "\n";
          out << "seconds: " << std::fixed << std::setprecision(3) << o.seconds
              << "\n";
          out << "sharding: " << o.shard_id << "/" << o.shards << "\n";
          if (o.aborted) out << "aborted: " << o.abort_reason << "\n";
        }
        return o.aborted ? 1 : 0;
      }
      MinimumOutcome o = find_minimum(f, max_len, options);
      if (json) {
        out << to_json(o).dump() << "\n";
      } else {
        out << "spec: " << o.spec << "\n";
        if (o.found)
          out << "min_length: " << o.min_length << "\n";
        else
          out << "no solution up to length " << o.searched_up_to << "\n";
        out << "solutions (" << o.solutions.size() << "):\n";
        for (const auto& s : o.solutions)
          out << "  " << format_word(s.word) << "\n";
        out << "nodes: " << o.nodes << "\n";
        out << "seconds: " << std::fixed << std::setprecision(3) << o.seconds
            << "\n";
        if (o.aborted) out << "aborted: " << o.abort_reason << "\n";
      }
      return o.aborted ? 1 : 0;
    }

    if (app.got_subcommand(table)) {
      auto rows = length_table(table_k, table_max_i);
      if (json) {
        out << to_json(rows, table_k).dump() << "\n";
      } else {
        out << "i\tn\tL_" << table_k << "(n)\tratio\n";
        for (const auto& row : rows) {
          out << row.i << "\t" << row.n << "\t" << row.length << "\t";
          if (row.ratio)
            out << std::fixed << std::setprecision(4) << *row.ratio;
          else
            out << "-";
          out << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(catalog)) {
      if (catalog_name.empty()) {
        for (const auto& name : catalog_names()) {
          ConstructionReport r = catalog_entry(name);
          if (json) {
            out << to_json(r).dump() << "\n";
          } else {
            out << name << ": unreduced " << r.unreduced << ", reduced "
                << r.reduced << ", verdict "
                << (r.verdict && r.verdict->ok ? "ok" : "FAIL") << "\n";
          }
        }
        return 0;
      }
      ConstructionReport r = catalog_entry(catalog_name);
      print_report(r, json, out);
      return report_status(r);
    }

    if (app.got_subcommand(render)) {
      Word w = parse_word(word_text);
      std::string svg = render_svg(w);
      if (out_path.empty()) {
        out << svg;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        file << svg;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << " at position " << e.position
        << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace hangwire
