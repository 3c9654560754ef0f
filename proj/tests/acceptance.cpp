// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
//   1 replay of the transcribed identity corpus (g <= 6, n <= 4, < 10 s)
//   2 inverse composition for every catalogued table at both levels
//   3 relator preservation on closed kinds
//   4 cross-level consistency of the pi and pi_plus tables
//   5 phi/psi isomorphism checks for 2 <= g <= 8
//   6 subgroup arithmetic for the pi_plus generator expansions
//   7 word-problem agreement with the independent oracles (< 60 s)
//   8 randomized core algebra properties (>= 1e5 cases)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "pi1/folding.hpp"
#include "pi1/plus_subgroup.hpp"
#include "pi1/verify.hpp"

using namespace pi1;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, bool ok, const std::string& what, double seconds,
            double budget = 0.0) {
  bool in_budget = budget == 0.0 || seconds < budget;
  if (!ok || !in_budget) ++failures;
  std::string tail;
  if (budget > 0.0) tail = " / budget " + std::to_string(static_cast<int>(budget)) + "s";
  std::printf("[%s] criterion %d: %s (%.2fs%s)\n", ok && in_budget ? "PASS" : "FAIL", criterion,
              what.c_str(), seconds, tail.c_str());
  std::fflush(stdout);
}

std::string suite_summary(const VerificationReport& r) {
  return std::to_string(r.records.size()) + " checks, " +
         std::to_string(r.count(RecordResult::Status::fail)) + " failures, " +
         std::to_string(r.count(RecordResult::Status::skip)) + " skips";
}

VerificationReport run(Suite suite, int glo, int ghi, int nlo, int nhi) {
  VerifyOptions options;
  options.g_range = {glo, ghi};
  options.n_range = {nlo, nhi};
  options.jobs = 4;
  return run_suite(Corpus::embedded(), suite, options);
}

Word random_word(std::mt19937_64& rng, const AlphabetRef& a, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, a->size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  int target = len(rng);
  for (int i = 0; i < target; ++i)
    letters.push_back({a->symbols()[pick(rng)], static_cast<std::int8_t>(coin(rng) ? 1 : -1)});
  return Word(a, letters);
}

void criterion_replay() {
  Timer t;
  VerificationReport r = run(Suite::replay, 1, 6, 0, 4);
  const Corpus& c = Corpus::embedded();
  std::size_t corpus_records = c.actions().size() + c.identities().size();
  bool ok = r.ok() && corpus_records >= 100;
  report(1, ok,
         "replay: " + std::to_string(corpus_records) + " corpus records, " + suite_summary(r),
         t.seconds(), 10.0);
}

void criterion_inverses() {
  Timer t;
  VerificationReport r = run(Suite::inverses, 1, 6, 0, 4);
  report(2, r.ok(), "inverse composition: " + suite_summary(r), t.seconds());
}

void criterion_relator() {
  Timer t;
  VerificationReport r = run(Suite::relator, 1, 6, 0, 0);
  report(3, r.ok(), "relator preservation: " + suite_summary(r), t.seconds());
}

void criterion_crosslevel() {
  Timer t;
  VerificationReport r = run(Suite::crosslevel, 1, 6, 0, 4);
  report(4, r.ok(), "cross-level consistency: " + suite_summary(r), t.seconds());
}

void criterion_iso() {
  Timer t;
  VerificationReport r = run(Suite::iso, 2, 8, 0, 4);
  report(5, r.ok(), "phi/psi isomorphism: " + suite_summary(r), t.seconds());
}

void criterion_closure() {
  Timer t;
  VerificationReport r = run(Suite::closure, 2, 6, 1, 4);
  report(6, r.ok(), "subgroup arithmetic: " + suite_summary(r), t.seconds());
}

void criterion_word_problem() {
  Timer t;
  std::mt19937_64 rng(0x5eed0007);
  long checked = 0, bad = 0;
  for (SurfaceKind kind : {SurfaceKind{true, 2, 0}, SurfaceKind{false, 4, 0}}) {
    SurfacePresentation p = pi1_presentation(kind);
    std::uniform_int_distribution<int> nfac(1, 3), coin(0, 1);
    for (int i = 0; i < 10000; ++i) {
      Word w(p.alphabet);
      int k = nfac(rng);
      for (int f = 0; f < k; ++f) {
        Word c = random_word(rng, p.alphabet, 8);
        w = mul(w, conj(c, coin(rng) ? *p.relator : inv(*p.relator)));
      }
      ++checked;
      if (!is_trivial(w, p)) ++bad;
    }
    int certified = 0;
    while (certified < 10000) {
      Word w = random_word(rng, p.alphabet, 16);
      auto vec = exponent_vector(w);
      bool nontrivial_cert;
      if (kind.orientable) {
        nontrivial_cert = std::any_of(vec.begin(), vec.end(), [](long v) { return v != 0; });
      } else {
        nontrivial_cert =
            std::any_of(vec.begin(), vec.end(), [&](long v) { return v != vec[0]; }) ||
            vec[0] % 2 != 0;
      }
      if (!nontrivial_cert) continue;
      ++certified;
      ++checked;
      if (is_trivial(w, p)) ++bad;
    }
  }
  report(7, bad == 0,
         "word problem vs oracles: " + std::to_string(checked) + " words, " +
             std::to_string(bad) + " disagreements",
         t.seconds(), 60.0);
}

void criterion_core_properties() {
  Timer t;
  std::mt19937_64 rng(0x5eed0008);
  long cases = 0, bad = 0;
  auto expect = [&](bool ok) {
    ++cases;
    if (!ok) ++bad;
  };

  std::vector<AlphabetRef> alphabets{Alphabet::nonorientable_base(3, 2),
                                     Alphabet::orientable_base(2, 2), Alphabet::plus(3, 2)};
  for (int i = 0; i < 110000; ++i) {
    const AlphabetRef& a = alphabets[i % alphabets.size()];
    Word u = random_word(rng, a, 12), v = random_word(rng, a, 12), w = random_word(rng, a, 12);
    expect(mul(mul(u, v), w) == mul(u, mul(v, w)));
    expect(mul(u, inv(u)).empty());
    expect(inv(inv(v)) == v);
    auto vu = exponent_vector(u), vv = exponent_vector(v), vuv = exponent_vector(mul(u, v));
    bool additive = true;
    for (std::size_t s = 0; s < vu.size(); ++s) additive = additive && vuv[s] == vu[s] + vv[s];
    expect(additive);
  }

  // substitute distributes over mul: apply a catalogued table map
  SurfaceKind n32{false, 3, 2};
  AutoTable table =
      action_table(Corpus::embedded(), ActionGenName{ActionKind::b_r, 1}, Level::pi, n32);
  for (int i = 0; i < 20000; ++i) {
    Word u = random_word(rng, table.alphabet, 10), v = random_word(rng, table.alphabet, 10);
    expect(substitute(mul(u, v), table.forward) ==
           mul(substitute(u, table.forward), substitute(v, table.forward)));
  }

  // folding determinism under generator permutation
  AlphabetRef f3 = Alphabet::nonorientable_base(3, 0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Word> gens;
    std::uniform_int_distribution<int> ngens(1, 5);
    int k = ngens(rng);
    for (int j = 0; j < k; ++j) gens.push_back(random_word(rng, f3, 8));
    SubgroupGraph g1 = SubgroupGraph::build(f3, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    SubgroupGraph g2 = SubgroupGraph::build(f3, gens);
    expect(g1.rank() == g2.rank() && g1.index() == g2.index() &&
           g1.vertex_count() == g2.vertex_count());
    Word probe = random_word(rng, f3, 12);
    expect(g1.member(probe) == g2.member(probe));
  }

  // Nielsen-Schreier consistency on permutation covers
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<std::size_t> deg(1, 8);
    std::size_t k = deg(rng);
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t s = 0; s < f3->size(); ++s) {
      std::vector<std::size_t> p(k);
      for (std::size_t v = 0; v < k; ++v) p[v] = v;
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(p);
    }
    SubgroupGraph cover = SubgroupGraph::from_permutation_action(f3, perms);
    auto index = cover.index();
    expect(index.has_value() && cover.rank() == *index * (f3->size() - 1) + 1);
    SubgroupGraph regen = SubgroupGraph::build(f3, cover.basis());
    expect(regen.rank() == cover.rank() && regen.index() == cover.index());
  }

  report(8, bad == 0,
         "core algebra properties: " + std::to_string(cases) + " randomized cases, " +
             std::to_string(bad) + " failures",
         t.seconds());
}

}  // namespace

int main() {
  criterion_replay();
  criterion_inverses();
  criterion_relator();
  criterion_crosslevel();
  criterion_iso();
  criterion_closure();
  criterion_word_problem();
  criterion_core_properties();
  if (failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
