#include "pi1/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "pi1/folding.hpp"
#include "pi1/plus_subgroup.hpp"
#include "pi1/version.hpp"

namespace pi1 {

Suite parse_suite(std::string_view text) {
  if (text == "replay") return Suite::replay;
  if (text == "inverses") return Suite::inverses;
  if (text == "relator") return Suite::relator;
  if (text == "crosslevel") return Suite::crosslevel;
  if (text == "iso") return Suite::iso;
  if (text == "closure") return Suite::closure;
  if (text == "all") return Suite::all;
  raise(Errc::invalid_name, "unknown suite '" + std::string(text) + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::replay: return "replay";
    case Suite::inverses: return "inverses";
    case Suite::relator: return "relator";
    case Suite::crosslevel: return "crosslevel";
    case Suite::iso: return "iso";
    case Suite::closure: return "closure";
    case Suite::all: return "all";
  }
  return "?";
}

RangePair parse_range(std::string_view text) {
  auto dots = text.find("..");
  RangePair r;
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      raise(Errc::invalid_name, "bad range '" + std::string(text) + "'");
    return v;
  };
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) raise(Errc::invalid_name, "empty range '" + std::string(text) + "'");
  return r;
}

std::size_t VerificationReport::count(RecordResult::Status s) const {
  std::size_t c = 0;
  for (const auto& r : records)
    if (r.status == s) ++c;
  return c;
}

namespace {

using Status = RecordResult::Status;

std::string binding_str(const Binding& b) {
  std::string out;
  for (const auto& [var, value] : b) {
    if (var == 'g' || var == 'n') continue;
    if (!out.empty()) out += ',';
    out += std::string(1, var) + "=" + std::to_string(value);
  }
  return out;
}

std::string instance_str(const SurfaceKind& kind, const Binding& b) {
  std::string s = to_string(kind);
  std::string vars = binding_str(b);
  if (!vars.empty()) s += " " + vars;
  return s;
}

// Per-(kind) check context with lazily built tables.
struct KindContext {
  const Corpus& corpus;
  SurfaceKind kind;
  std::map<std::pair<std::string, int>, AutoTable> tables;  // (name text, level) -> table

  const AutoTable& table(const ActionGenName& name, Level level) {
    auto key = std::make_pair(to_string(name), static_cast<int>(level));
    auto it = tables.find(key);
    if (it == tables.end())
      it = tables.emplace(key, action_table(corpus, name, level, kind)).first;
    return it->second;
  }
};

ActionGenName record_name_instance(const ActionRecord& rec, const Binding& b) {
  ActionGenName name;
  if (rec.name_base == "t_c0") name.kind = ActionKind::t_c0;
  else if (rec.name_base == "t_c_odd") name.kind = ActionKind::t_c_odd;
  else if (rec.name_base == "t_c_even") name.kind = ActionKind::t_c_even;
  else if (rec.name_base == "t_d") name.kind = ActionKind::t_d;
  else if (rec.name_base == "t_a") name.kind = ActionKind::t_a;
  else if (rec.name_base == "t_b") name.kind = ActionKind::t_b;
  else if (rec.name_base == "Y_mu_a1") name.kind = ActionKind::y_mu_a1;
  else if (rec.name_base == "B_r") name.kind = ActionKind::b_r;
  else if (rec.name_base == "B_r0") name.kind = ActionKind::b_r0;
  else if (rec.name_base == "t_s") name.kind = ActionKind::t_s;
  else raise(Errc::corpus_error, "unknown name '" + rec.name_base + "'");
  int* slots[2] = {&name.p1, &name.p2};
  for (std::size_t t = 0; t < rec.name_params.size() && t < 2; ++t) {
    if (std::holds_alternative<int>(rec.name_params[t]))
      *slots[t] = std::get<int>(rec.name_params[t]);
    else
      *slots[t] = b.at(std::get<char>(rec.name_params[t]));
  }
  return name;
}

void replay_action_record(KindContext& ctx, const ActionRecord& rec,
                          std::vector<RecordResult>& out) {
  const SurfaceKind& kind = ctx.kind;
  if (!rec.constraint.matches_kind(kind)) return;
  Binding initial{{'g', kind.genus}, {'n', kind.boundary}};
  if (rec.untranscribed) {
    // coverage accounting: present but skipped, with the reason
    rec.constraint.enumerate(initial, [&](const Binding& b) {
      out.push_back({rec.location, instance_str(kind, b), Status::skip, rec.skip_reason});
    });
    return;
  }
  rec.constraint.enumerate(initial, [&](const Binding& b) {
    RecordResult result{rec.location, instance_str(kind, b), Status::pass, ""};
    try {
      ResolvedSym gen = resolve(*rec.generator, b);
      TaggedWord level_image = eval_expr(rec.image, kind, rec.level, b);
      Word base_route = to_base(kind, level_image);
      Word direct = eval_expr(rec.image, kind, Level::pi, b).word;
      if (!(base_route == direct)) {
        result.status = Status::fail;
        result.note = "expansion routes disagree: " + to_string(base_route) + " vs " +
                      to_string(direct);
      }
      if (result.status == Status::pass && !kind.orientable) {
        Word gen_base = expand_base(kind, gen);
        if (orientation_character(gen_base) != orientation_character(direct)) {
          result.status = Status::fail;
          result.note = "orientation character not preserved";
        }
      }
      if (result.status == Status::pass) {
        ActionGenName name = record_name_instance(rec, b);
        const AutoTable& table = ctx.table(name, rec.level);
        Word gen_level = expand_level(kind, rec.level, gen);
        Word applied = apply(table, rec.dir, gen_level);
        if (!(applied == level_image.word)) {
          result.status = Status::fail;
          result.note = "table image mismatch: " + to_string(applied) + " vs " +
                        to_string(level_image.word);
        }
      }
    } catch (const Error& e) {
      result.status = Status::fail;
      result.note = e.what();
    }
    out.push_back(std::move(result));
  });
}

void replay_identity_record(const SurfaceKind& kind, const IdentityRecord& rec,
                            std::vector<RecordResult>& out) {
  if (!rec.constraint.matches_kind(kind)) return;
  Binding initial{{'g', kind.genus}, {'n', kind.boundary}};
  rec.constraint.enumerate(initial, [&](const Binding& b) {
    RecordResult result{rec.id, instance_str(kind, b), Status::pass, ""};
    try {
      Word lhs = to_base(kind, eval_expr(rec.lhs, kind, rec.level, b));
      Word rhs = to_base(kind, eval_expr(rec.rhs, kind, rec.level, b));
      if (!(lhs == rhs)) {
        result.status = Status::fail;
        result.note = to_string(lhs) + " != " + to_string(rhs);
      } else if (rec.level != Level::pi) {
        // second route: expand every symbol straight to the base alphabet
        Word lhs2 = to_base(kind, eval_expr(rec.lhs, kind, Level::pi, b));
        Word rhs2 = to_base(kind, eval_expr(rec.rhs, kind, Level::pi, b));
        if (!(lhs2 == rhs2) || !(lhs2 == lhs)) {
          result.status = Status::fail;
          result.note = "direct-base route disagrees: " + to_string(lhs2) + " vs " +
                        to_string(rhs2);
        }
      }
    } catch (const Error& e) {
      result.status = Status::fail;
      result.note = e.what();
    }
    out.push_back(std::move(result));
  });
}

std::vector<SurfaceKind> kinds_in_range(const VerifyOptions& options) {
  std::vector<SurfaceKind> kinds;
  for (int g = options.g_range.lo; g <= options.g_range.hi; ++g) {
    for (int n = options.n_range.lo; n <= options.n_range.hi; ++n) {
      if (g >= 0) kinds.push_back({true, g, n});
      if (g >= 1) kinds.push_back({false, g, n});
    }
  }
  return kinds;
}

void run_replay(const Corpus& corpus, const SurfaceKind& kind, std::vector<RecordResult>& out) {
  KindContext ctx{corpus, kind, {}};
  for (const ActionRecord& rec : corpus.actions()) replay_action_record(ctx, rec, out);
  for (const IdentityRecord& rec : corpus.identities()) replay_identity_record(kind, rec, out);
}

void run_inverses(const Corpus& corpus, const SurfaceKind& kind,
                  std::vector<RecordResult>& out) {
  std::vector<Level> levels{Level::pi};
  if (!kind.orientable) levels.push_back(Level::pi_plus);
  for (Level level : levels) {
    for (const ActionGenName& name : action_catalogue(kind, level)) {
      AutoTable table = action_table(corpus, name, level, kind);
      CheckReport report = verify_inverse(table);
      RecordResult result{"inverse/" + to_string(name) + "/" + to_string(level),
                          to_string(kind), report.passed ? Status::pass : Status::fail, ""};
      if (!report.passed) result.note = report.failures.front();
      out.push_back(std::move(result));

      H1Matrix h1 = induced_h1_matrix(table);
      RecordResult dets{"h1det/" + to_string(name) + "/" + to_string(level), to_string(kind),
                        (h1.det == 1 || h1.det == -1) ? Status::pass : Status::fail,
                        "det=" + std::to_string(h1.det)};
      out.push_back(std::move(dets));
    }
  }
}

void run_relator(const Corpus& corpus, const SurfaceKind& kind,
                 std::vector<RecordResult>& out) {
  if (!kind.closed() || kind.genus < 1) return;
  SurfacePresentation p = pi1_presentation(kind);
  if (!p.relator) return;
  for (const ActionGenName& name : action_catalogue(kind, Level::pi)) {
    AutoTable table = action_table(corpus, name, Level::pi, kind);
    CheckReport report = relator_conjugacy_check(table, p);
    RecordResult result{"relator/" + to_string(name), to_string(kind),
                        report.passed ? Status::pass : Status::fail, ""};
    if (!report.passed)
      result.note = report.failures.front();
    else if (!report.notes.empty())
      result.note = report.notes.front();
    out.push_back(std::move(result));
  }
}

void run_crosslevel(const Corpus& corpus, const SurfaceKind& kind,
                    std::vector<RecordResult>& out) {
  if (kind.orientable) return;
  for (const ActionGenName& name : action_catalogue(kind, Level::pi)) {
    CheckReport report = cross_consistency(corpus, name, kind);
    RecordResult result{"crosslevel/" + to_string(name), to_string(kind),
                        report.passed ? Status::pass : Status::fail, ""};
    if (!report.passed) result.note = report.failures.front();
    out.push_back(std::move(result));
  }
}

void run_iso(const Corpus&, const SurfaceKind& kind, std::vector<RecordResult>& out) {
  if (kind.orientable) return;
  CheckReport report = verify_iso(kind);
  RecordResult result{"iso/verify", to_string(kind),
                      report.passed ? Status::pass : Status::fail, ""};
  if (!report.passed)
    result.note = report.failures.front();
  else if (!report.notes.empty())
    result.note = report.notes.front();
  out.push_back(std::move(result));
}

void run_closure(const Corpus& corpus, const SurfaceKind& kind,
                 std::vector<RecordResult>& out) {
  if (kind.orientable || kind.boundary < 1) return;
  const int g = kind.genus, n = kind.boundary;
  AlphabetRef plus = Alphabet::plus(g, n);
  std::vector<Word> expansions;
  for (const GenSym& s : plus->symbols())
    expansions.push_back(plus_generator_expansion(kind, s));
  SubgroupGraph graph = SubgroupGraph::build(Alphabet::for_kind(kind), expansions);

  auto index = graph.index();
  out.push_back({"closure/index", to_string(kind),
                 index && *index == 2 ? Status::pass : Status::fail,
                 index ? "index=" + std::to_string(*index) : "index=infinite"});
  std::size_t expected_rank = 2 * static_cast<std::size_t>(g) + 2 * n - 3;
  out.push_back({"closure/rank", to_string(kind),
                 graph.rank() == expected_rank ? Status::pass : Status::fail,
                 "rank=" + std::to_string(graph.rank())});

  SymbolMap down = plus_to_base(kind);
  for (const ActionGenName& name : action_catalogue(kind, Level::pi_plus)) {
    AutoTable table = action_table(corpus, name, Level::pi_plus, kind);
    RecordResult result{"closure/images/" + to_string(name), to_string(kind), Status::pass, ""};
    for (const SymbolMap* m : {&table.forward, &table.backward}) {
      for (const auto& [s, image] : m->images) {
        Word base = substitute(image, down);
        if (orientation_character(base) != 0) {
          result.status = Status::fail;
          result.note = "image of " + to_string(s) + " has odd character";
        } else if (!graph.member(base)) {
          result.status = Status::fail;
          result.note = "image of " + to_string(s) + " leaves the kernel subgroup";
        }
      }
    }
    out.push_back(std::move(result));
  }

  std::vector<AutoTable> pi_tables;
  for (const ActionGenName& name : action_catalogue(kind, Level::pi))
    pi_tables.push_back(action_table(corpus, name, Level::pi, kind));
  CheckReport closure = closure_check(pi_tables, expansions);
  RecordResult result{"closure/lemma-condition", to_string(kind),
                      closure.passed ? Status::pass : Status::fail, ""};
  if (!closure.passed) result.note = closure.failures.front();
  out.push_back(std::move(result));
}

}  // namespace

VerificationReport run_suite(const Corpus& corpus, Suite suite, const VerifyOptions& options) {
  VerificationReport report;
  report.suite = to_string(suite);
  report.version = kVersion;
  {
    std::ostringstream hex;
    hex << std::hex << corpus.checksum();
    report.corpus_checksum = hex.str();
  }
  report.g_range = options.g_range;
  report.n_range = options.n_range;

  struct Task {
    std::function<void(std::vector<RecordResult>&)> fn;
  };
  std::vector<Task> tasks;
  auto add = [&](auto fn) { tasks.push_back({fn}); };

  for (const SurfaceKind& kind : kinds_in_range(options)) {
    if (suite == Suite::replay || suite == Suite::all)
      add([&corpus, kind](std::vector<RecordResult>& out) { run_replay(corpus, kind, out); });
    if (suite == Suite::inverses || suite == Suite::all)
      add([&corpus, kind](std::vector<RecordResult>& out) { run_inverses(corpus, kind, out); });
    if (suite == Suite::relator || suite == Suite::all)
      add([&corpus, kind](std::vector<RecordResult>& out) { run_relator(corpus, kind, out); });
    if (suite == Suite::crosslevel || suite == Suite::all)
      add([&corpus, kind](std::vector<RecordResult>& out) { run_crosslevel(corpus, kind, out); });
    if (suite == Suite::iso || suite == Suite::all)
      add([&corpus, kind](std::vector<RecordResult>& out) { run_iso(corpus, kind, out); });
    if (suite == Suite::closure || suite == Suite::all)
      add([&corpus, kind](std::vector<RecordResult>& out) { run_closure(corpus, kind, out); });
  }

  std::vector<std::vector<RecordResult>> slots(tasks.size());
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) tasks[t].fn(slots[t]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&]() {
        while (true) {
          std::size_t t = next.fetch_add(1);
          if (t >= tasks.size()) break;
          tasks[t].fn(slots[t]);
        }
      });
    }
    for (auto& w : workers) w.join();
  }
  for (auto& slot : slots)
    report.records.insert(report.records.end(), slot.begin(), slot.end());
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const RecordResult& a, const RecordResult& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.instance < b.instance;
                   });
  return report;
}

void write_report(const VerificationReport& report, std::ostream& os) {
  os << "pi1kit verification report\n";
  os << "suite: " << report.suite << "\n";
  os << "version: " << report.version << "\n";
  os << "corpus-checksum: " << report.corpus_checksum << "\n";
  os << "g-range: " << report.g_range.lo << ".." << report.g_range.hi << "\n";
  os << "n-range: " << report.n_range.lo << ".." << report.n_range.hi << "\n";
  os << "records:\n";
  for (const RecordResult& r : report.records) {
    os << r.id << " | " << r.instance << " | "
       << (r.status == RecordResult::Status::pass
               ? "pass"
               : r.status == RecordResult::Status::fail ? "fail" : "skip");
    if (!r.note.empty()) os << " | " << r.note;
    os << "\n";
  }
  os << "summary: total=" << report.records.size()
     << " pass=" << report.count(RecordResult::Status::pass)
     << " fail=" << report.count(RecordResult::Status::fail)
     << " skip=" << report.count(RecordResult::Status::skip) << "\n";
}

}  // namespace pi1
