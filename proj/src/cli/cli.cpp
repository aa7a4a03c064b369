#include <pbundle/cli.hpp>
#include <pbundle/errors.hpp>
#include <pbundle/json_io.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

namespace pbundle {

namespace {

enum class Format { json, csv, md };

/// Rows of a flat rendering of the outputs.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
  Json inputs = Json::object();
  Json outputs = Json::object();
  Table table;
  int exit_code = kExitOk;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

std::string render_table(const Table& t, Format f) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    if (f == Format::csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    } else {
      os << '|';
      for (const auto& c : cells) os << ' ' << md_field(c) << " |";
    }
    os << '\n';
  };
  line(t.header);
  if (f == Format::md) {
    os << '|';
    for (std::size_t i = 0; i < t.header.size(); ++i) os << " --- |";
    os << '\n';
  }
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw InvalidInput("cannot write '" + path + "'");
  outf << text;
  if (!outf) throw InvalidInput("failed writing '" + path + "'");
}

std::vector<Integer> parse_int_list(const std::string& text) {
  static const std::regex item("\\s*(-?[0-9]+)\\s*");
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw InvalidInput("'" + part + "' is not an integer in list '" + text + "'");
    out.emplace_back(m[1].str());
  }
  if (out.empty()) throw InvalidInput("empty integer list");
  return out;
}

Json integers(const std::vector<Integer>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(integer_to_json(x));
  return arr;
}

CommandResult cmd_segre(int n, const std::string& chern_text, std::optional<int> rank) {
  const std::vector<Integer> c = parse_int_list(chern_text);
  if (n < 0) throw InvalidInput("--n must be nonnegative");
  if (c.size() != static_cast<std::size_t>(n) + 1) {
    throw InvalidInput("--chern needs n+1 = " + std::to_string(n + 1) + " entries, got " + std::to_string(c.size()));
  }
  int rk = rank.value_or(1);
  if (!rank) {
    for (int i = 1; i <= n; ++i)
      if (c[i] != 0) rk = i;
  }
  const ChernData cd(n, rk, c);
  const SegreData s = segre_from_chern(cd);
  CommandResult res;
  res.inputs = {{"n", n}, {"chern", integers(c)}, {"rank", rk}};
  res.outputs = {{"segre", integers(s.s())}};
  res.table.header = {"i", "c_i", "s_i"};
  for (int i = 0; i <= n; ++i) res.table.rows.push_back({std::to_string(i), c[i].get_str(), s[i].get_str()});
  return res;
}

void report_rows(const ConstraintReport& rep, Table& t) {
  t.header = {"id", "status", "witness"};
  for (const auto& e : rep.entries()) t.rows.push_back({e.id, std::string(to_string(e.status)), e.witness});
}

CommandResult cmd_check(const std::string& path) {
  const SetupParams p = params_from_json(parse_json(read_file(path), path));
  const ConstraintReport rep = run_all(p);
  CommandResult res;
  res.inputs = {{"params_file", path}, {"params", to_json(p)}};
  res.outputs = {{"report", to_json(rep)}};
  report_rows(rep, res.table);
  res.exit_code = rep.all_pass() ? kExitOk : kExitMathFailure;
  return res;
}

CommandResult cmd_replay(const std::string& id) {
  std::vector<std::string> ids;
  if (id == "all") {
    for (auto x : replay_ids()) ids.emplace_back(x);
  } else {
    ids.push_back(id);
  }
  CommandResult res;
  res.inputs = {{"case_id", id}};
  Json traces = Json::array();
  res.table.header = {"case_id", "description", "computed", "expected", "match"};
  for (const auto& x : ids) {
    std::optional<CaseReplayResult> r = run_replay(x);
    if (!r) {
      std::string known;
      for (auto k : replay_ids()) known += (known.empty() ? "" : ", ") + std::string(k);
      throw InvalidInput("unknown replay '" + x + "' (known: " + known + ", all)");
    }
    traces.push_back(to_json(*r));
    for (const auto& s : r->steps()) res.table.rows.push_back({x, s.description, s.computed, s.expected, s.match ? "true" : "false"});
    if (r->verdict() == Verdict::mismatch) res.exit_code = kExitMathFailure;
  }
  res.outputs = {{"replays", traces}};
  return res;
}

CommandResult cmd_enumerate(const std::string& path, std::optional<long long> budget) {
  EnumerationQuery q = query_from_json(parse_json(read_file(path), path));
  if (budget) {
    q.budget = *budget;
    q.validate();
  }
  const EnumerationResult r = enumerate(q);
  CommandResult res;
  res.inputs = {{"config_file", path}, {"query", to_json(q)}};
  res.outputs = to_json(r);
  res.table.header = {"key", "status", "chern", "tags"};
  for (const auto& s : r.survivors) {
    std::string tags;
    for (const auto& t : s.tags) tags += (tags.empty() ? "" : " ") + t;
    res.table.rows.push_back({signature_key(s.params), std::string(to_string(s.status)), s.params.chern.total().to_string(), tags});
  }
  return res;
}

CommandResult cmd_examples_verify(std::optional<int> id, std::optional<int> k, std::optional<int> n, int max_n) {
  std::vector<std::pair<ExampleRecord, ConstraintReport>> rows;
  if (id) {
    rows = verify_example(*id, k, n, max_n);
  } else {
    if (k || n) throw InvalidInput("--k and --n need --id");
    for (auto& rec : catalog(max_n)) {
      ConstraintReport rep = run_all(rec.params);
      rows.emplace_back(std::move(rec), std::move(rep));
    }
  }
  CommandResult res;
  res.inputs = {{"id", id ? Json(*id) : Json(nullptr)}, {"k", k ? Json(*k) : Json(nullptr)}, {"n", n ? Json(*n) : Json(nullptr)},
                {"max_n", max_n}};
  Json recs = Json::array();
  long failed = 0;
  res.table.header = {"key", "all_pass", "failures"};
  for (const auto& [rec, rep] : rows) {
    recs.push_back({{"key", rec.key}, {"report", to_json(rep)}});
    std::string fails;
    for (const auto& f : rep.failures()) fails += (fails.empty() ? "" : " ") + f;
    res.table.rows.push_back({rec.key, rep.all_pass() ? "true" : "false", fails});
    if (!rep.all_pass()) ++failed;
  }
  res.outputs = {{"records", recs}, {"record_count", rows.size()}, {"failed_count", failed}};
  res.exit_code = failed == 0 ? kExitOk : kExitMathFailure;
  return res;
}

CommandResult cmd_examples_export(int max_n) {
  CommandResult res;
  res.inputs = {{"max_n", max_n}};
  Json recs = Json::array();
  res.table.header = {"key", "bundle", "y", "w"};
  for (const auto& rec : catalog(max_n)) {
    recs.push_back(to_json(rec));
    res.table.rows.push_back({rec.key, rec.bundle.to_string(), rec.y_description, rec.w_description});
  }
  res.outputs = {{"catalog", recs}};
  return res;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for projective bundles over projective space with a smooth blow-up structure", "pbundle"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format_text = "json";
  std::string out_path;
  bool deterministic = false;
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--out", out_path, "Write the output to this file");
  app.add_flag("--deterministic", deterministic, "Omit timing so repeated runs are byte-identical");

  std::function<CommandResult()> action;
  std::string command_name;

  auto* segre = app.add_subcommand("segre", "Segre classes from Chern classes");
  int seg_n = 0;
  std::string seg_chern;
  std::optional<int> seg_rank;
  segre->add_option("--n", seg_n, "Dimension of the base")->required();
  segre->add_option("--chern", seg_chern, "Comma-separated c_0..c_n")->required();
  segre->add_option("--rank", seg_rank, "Bundle rank (default: index of the last nonzero class)");
  segre->callback([&] {
    command_name = "segre";
    action = [&] { return cmd_segre(seg_n, seg_chern, seg_rank); };
  });

  auto* check = app.add_subcommand("check", "Run every constraint on a params file");
  std::string params_path;
  check->add_option("--params", params_path, "Params JSON file")->required();
  check->callback([&] {
    command_name = "check";
    action = [&] { return cmd_check(params_path); };
  });

  auto* replay = app.add_subcommand("replay", "Replay a scripted case elimination");
  std::string case_id;
  replay->add_option("case_id", case_id, "Replay id, or 'all'")->required();
  replay->callback([&] {
    command_name = "replay";
    action = [&] { return cmd_replay(case_id); };
  });

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate parameter tuples surviving the constraints");
  std::string config_path;
  std::optional<long long> budget;
  enumerate_cmd->add_option("--config", config_path, "Enumeration config JSON file")->required();
  enumerate_cmd->add_option("--budget", budget, "Override the tuple budget");
  enumerate_cmd->callback([&] {
    command_name = "enumerate";
    action = [&] { return cmd_enumerate(config_path, budget); };
  });

  auto* examples = app.add_subcommand("examples", "Example catalog");
  examples->require_subcommand(1);
  auto* verify = examples->add_subcommand("verify", "Check catalog records");
  std::optional<int> ex_id, ex_k, ex_n;
  int max_n = 6;
  verify->add_option("--id", ex_id, "Example id");
  verify->add_option("--k", ex_k, "Variant index");
  verify->add_option("--n", ex_n, "Base dimension");
  verify->add_option("--max-n", max_n, "Largest n for families indexed by n")->check(CLI::Range(2, 12));
  verify->callback([&] {
    command_name = "examples verify";
    action = [&] { return cmd_examples_verify(ex_id, ex_k, ex_n, max_n); };
  });
  auto* exp = examples->add_subcommand("export", "Write the catalog as JSON");
  exp->add_option("--max-n", max_n, "Largest n for families indexed by n")->check(CLI::Range(2, 12));
  exp->callback([&] {
    command_name = "examples export";
    action = [&] { return cmd_examples_export(max_n); };
  });

  std::vector<std::string> argv_store;
  argv_store.push_back("pbundle");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    CommandResult res = action();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = {{"name", command_name}, {"args", args}};
    doc["inputs"] = res.inputs;
    doc["outputs"] = res.outputs;
    doc["exit_code"] = res.exit_code;
    if (!deterministic) doc["timing"] = {{"elapsed_ms", ms}};

    const Format fmt = format_text == "csv" ? Format::csv : (format_text == "md" ? Format::md : Format::json);
    const std::string text = fmt == Format::json ? dump_json(doc) : render_table(res.table, fmt);
    if (out_path.empty()) {
      out << text;
    } else {
      write_file(out_path, text);
    }
    return res.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace pbundle
