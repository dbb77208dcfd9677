// One PASS/FAIL line per acceptance criterion. All arithmetic is exact, so
// every comparison below is equality; the pinned constants are counts and
// budgets, not floating tolerances.
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "stringnet/fragment.hpp"
#include "stringnet/shell.hpp"
#include "stringnet/validate.hpp"

using namespace sn;
namespace fs = std::filesystem;

namespace {

constexpr int kOracleVertexBudget = 6;
constexpr int kDprofTriples = 20;
constexpr int kDprofFunctors = 20;
constexpr unsigned kDprofSeed = 7;
constexpr long kRescale = 2;

const std::string kData = SN_DATA_DIR;

std::string cat_path(const std::string& n) { return kData + "/categories/" + n + ".cat"; }
std::string job_path(const std::string& n) { return kData + "/jobs/" + n + ".job"; }

struct Criterion {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      notes.push_back(what);
    }
  }
};

bool all_pass(const CheckReport& r, std::string* w) {
  for (const auto& it : r.items)
    if (!it.pass) {
      *w = it.name + ": " + it.witness;
      return false;
    }
  return !r.items.empty();
}

// first failing item whose name starts with prefix, with a witness
bool rejected(const CheckReport& r, const std::string& prefix) {
  for (const auto& it : r.items)
    if (!it.pass && it.name.rfind(prefix, 0) == 0 && !it.witness.empty()) return true;
  return false;
}

void criterion_validate(Criterion& c) {
  for (const char* n : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
    Report R = cmd_validate(load_category(cat_path(n)));
    c.require(R.status() == kExitPass, std::string(n) + " does not validate");
  }
  int seen = 0;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kData + "/mutations")) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    ++seen;
    CategoryDoc d = load_category(p.string());
    ValidationReport v = d.structure;
    if (v.ok()) v.append(validate(*d.cat));
    bool named = !v.ok() && !v.violations[0].axiom.empty() && !v.violations[0].witness.empty();
    c.require(named, p.filename().string() + " accepted or rejected without a witness");
  }
  c.require(seen > 0, "no mutation fixtures");
}

void criterion_oracle(Criterion& c) {
  for (const char* n : {"vec_z2", "vec_z3", "fibonacci", "ising"}) {
    JobFile J = load_job(job_path(n));
    c.require(!J.oracles.empty(), std::string(n) + " has no oracle fixtures");
    Report R = cmd_oracle(J, kOracleVertexBudget);
    c.require(R.status() == kExitPass, std::string(n) + " oracle and engine disagree or budget exceeded");
  }
}

// G-orbits of commuting pairs of a pointed fusion category, from fusion rules
int commuting_pair_orbits(const FusionCategory& C) {
  int n = C.rank();
  auto mul = [&](Label a, Label b) {
    for (Label x = 0; x < n; ++x)
      if (C.N(a, b, x) == 1) return x;
    return Label(-1);
  };
  auto conj = [&](Label k, Label g) { return mul(mul(k, g), C.dual(k)); };
  std::set<std::pair<Label, Label>> pairs;
  for (Label g = 0; g < n; ++g)
    for (Label h = 0; h < n; ++h)
      if (mul(g, h) == mul(h, g)) pairs.insert({g, h});
  int orbits = 0;
  while (!pairs.empty()) {
    auto [g, h] = *pairs.begin();
    for (Label k = 0; k < n; ++k) pairs.erase({conj(k, g), conj(k, h)});
    ++orbits;
  }
  return orbits;
}

int simple_count(const CategoryDoc& d, Manifold m) {
  std::vector<CDec> cs;
  for (const auto& g : d.generators)
    if (!g.frob && g.c.man == m) cs.push_back(g.c);
  if (m == Manifold::circle) return int(simple_objects(CCircle(*d.engine, cs)).simples.size());
  return int(simple_objects(CInterval(*d.engine, cs)).simples.size());
}

void criterion_simples(Criterion& c) {
  const std::vector<std::pair<std::string, int>> expected{{"vec_z2", 4}, {"vec_z3", 9}};
  for (const auto& [n, want] : expected) {
    CategoryDoc d = load_category(cat_path(n));
    int circle = simple_count(d, Manifold::circle);
    c.require(circle == want, n + " circle simples " + std::to_string(circle));
    c.require(circle == commuting_pair_orbits(*d.cat), n + " circle simples differ from commuting pairs");
    int interval = simple_count(d, Manifold::interval);
    c.require(interval == d.cat->rank(), n + " interval simples " + std::to_string(interval));
  }
}

void criterion_suite(Criterion& c, const std::string& job, const std::string& suite) {
  Report R = cmd_theorem(load_job(job_path(job)), suite);
  c.require(R.status() == kExitPass, job + " " + suite + " fails");
  c.require(R.comparison().find("passed = ") != std::string::npos, job + " " + suite + " ran no checks");
}

void criterion_ucor(Criterion& c) {
  JobFile J = load_job(job_path("vec_z2"));
  std::set<JobDecl::Kind> kinds;
  for (const auto& j : J.jobs) kinds.insert(j.kind);
  c.require(kinds.size() == 3, "vec_z2 job lacks an annulus, rectangle or pants plan");
  criterion_suite(c, "vec_z2", "ucor-iso");
}

std::vector<FDec> z2_circles(const CategoryDoc& d) {
  return {parse_fdec(d, {"circle", "A"}), parse_fdec(d, {"circle", "A", "R"}), parse_fdec(d, {"circle", "A", "T"}),
          trivial_decoration(*d.engine, {Manifold::circle, {}}),
          trivial_decoration(*d.engine, {Manifold::circle, simple(1)})};
}

void criterion_vtrans(Criterion& c) {
  CategoryDoc d = load_category(cat_path("vec_z2"));
  CircleTransform T(*d.engine, z2_circles(d));
  FragmentModel F = frob_fragment(T), K = field_fragment(T);
  auto theta = ucor_components(T);
  std::string w;
  c.require(all_pass(check_vertical_transformation(F, K, theta), &w), "Ucor family: " + w);
  for (size_t cell = 0; cell < theta.size(); ++cell) {
    if (theta[cell].rows() == 0 || theta[cell].cols() == 0) continue;
    auto bad = theta;
    bad[cell] *= Scalar(kRescale);
    c.require(rejected(check_vertical_transformation(F, K, bad), "horizontal functoriality"),
              "rescaled cell " + std::to_string(cell) + " kept horizontal functoriality");
    auto zero = theta;
    zero[cell] *= Scalar(0);
    c.require(rejected(check_vertical_transformation(F, K, zero), ""),
              "zeroed cell " + std::to_string(cell) + " accepted");
  }
}

void criterion_dprof(Criterion& c) {
  std::string w;
  c.require(all_pass(dprof_kernel(kDprofSeed, kDprofTriples, kDprofFunctors), &w), "kernel: " + w);
  CategoryDoc d = load_category(cat_path("vec_z2"));
  CircleTransform T(*d.engine, z2_circles(d));
  auto s = ucor_square(T);
  c.require(check_weak_invertibility(s->square, s->left, s->right).invertible, "annulus Ucor square rejected");
  IntervalTransform I(*d.engine, {parse_fdec(d, {"interval", "1", "P", "A", "Q", "1"}),
                                  parse_fdec(d, {"interval", "1", "P", "A", "R", "A", "Q", "1"})});
  auto r = ucor_square(I);
  c.require(check_weak_invertibility(r->square, r->left, r->right).invertible, "rectangle Ucor square rejected");
  FinLinCategory A = mat_category("A", 2, {{1, 0}, {1, 1}, {0, 2}});
  Profunctor UA = identity_profunctor(A);
  EquivalenceData e = identity_equivalence(A);
  WeakInverse bad = check_weak_invertibility(projection_square(A, UA, 0), e, e);
  c.require(!bad.invertible && !bad.witness.empty(), "rank-deficient square accepted");
}

void criterion_determinism(Criterion& c) {
  JobFile J = load_job(job_path("vec_z2"));
  Report a = cmd_report(J, kOracleVertexBudget, std::nullopt);
  Report b = cmd_report(J, kOracleVertexBudget, std::nullopt);
  c.require(a.status() == kExitPass, "report does not pass");
  c.require(!a.comparison().empty() && a.comparison() == b.comparison(), "comparison sections differ");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"fixtures validate and mutations fail with a witness", criterion_validate},
      {"oracle dimension equals engine dimension", criterion_oracle},
      {"circle and interval simple counts", criterion_simples},
      {"feq suite for k[Z/2] and the trivial Fibonacci algebra",
       [](Criterion& c) {
         criterion_suite(c, "vec_z2", "feq");
         criterion_suite(c, "fibonacci", "feq");
       }},
      {"Ucor and Phi mutually inverse on rectangles, annuli and pants", criterion_ucor},
      {"vertical transformation axioms and mutations", criterion_vtrans},
      {"double profunctor kernel", criterion_dprof},
      {"byte-identical comparison sections", criterion_determinism},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    for (const auto& n : c.notes) std::cout << " | " << n;
    std::cout << std::endl;
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
