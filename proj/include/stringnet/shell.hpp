#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stringnet/check.hpp"
#include "stringnet/io.hpp"

namespace sn {

enum ExitCode { kExitPass = 0, kExitInternal = 1, kExitParse = 2, kExitInvalid = 3, kExitCheck = 4, kExitBudget = 5 };

// Line-oriented report: named comparison sections of key = value lines in
// emission order, then a [timing] section that is excluded from comparisons.
class Report {
 public:
  void section(const std::string& name);
  void put(const std::string& key, const std::string& value);
  void put(const std::string& key, long value) { put(key, std::to_string(value)); }
  void checks(const std::string& prefix, const CheckReport& r);
  void timing(const std::string& key, double ms);
  void note(const std::string& key, const std::string& value);  // timing side, e.g. cache hits
  void merge(const Report& o);

  std::string comparison() const;
  std::string str() const;
  int status() const { return status_; }
  void fail(int code);  // keeps the most severe code
  void clear_status() { status_ = kExitPass; }

 private:
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> sections_;
  std::vector<std::pair<std::string, std::string>> timing_;
  int status_ = kExitPass;
};

struct JobDecl {
  enum Kind { annulus, rectangle, pants };
  Kind kind = annulus;
  std::string name;
  std::vector<std::string> objects;  // annulus, rectangle: decorations; pants: legs
  std::vector<std::string> outs;     // pants outputs
  int line = 0;
};

struct MutationDecl {
  std::string name;
  std::string kind;  // "scale" or "projection"
  std::string job;
  int cell = 0;
  long factor = 2;
  int simples = 0;
  std::vector<std::vector<int>> objects;
  int line = 0;
};

struct OracleDecl {
  std::string kind;  // disk, annulus, frob
  std::vector<std::string> args;
  int line = 0;
};

// Parsed job file: a category, named decorations and what to run on them.
struct JobFile {
  std::string origin;
  std::string category_path;
  CategoryDoc doc;
  std::map<std::string, FDec> frob;
  std::map<std::string, CDec> bc;
  std::vector<std::string> frob_order, bc_order;
  std::vector<JobDecl> jobs;
  std::vector<MutationDecl> mutations;
  std::vector<OracleDecl> oracles;
  std::vector<std::string> suites;
  unsigned dprof_seed = 1;
  int dprof_triples = 20, dprof_functors = 20;
};

// load_category with unreadable files reported as parse errors
CategoryDoc open_category(const std::string& path);
JobFile parse_job(const std::string& text, const std::string& origin, const std::string& base_dir);
JobFile load_job(const std::string& path);
// Job over the generating decorations of a category file.
JobFile default_job(const std::string& category_path);

// Validation verdict of a parsed category: structure, axioms and algebras.
Report cmd_validate(const CategoryDoc& doc);
Report cmd_simples(const CategoryDoc& doc, const std::string& kind, const std::string& manifold,
                   const std::optional<std::string>& cache_dir);
Report cmd_theorem(const JobFile& job, const std::string& suite);
Report cmd_oracle(const JobFile& job, int budget);
// Everything a job asks for, in a fixed order.
Report cmd_report(const JobFile& job, int budget, const std::optional<std::string>& cache_dir);

// SHA-256 of a string as lowercase hex.
std::string sha256_hex(const std::string& data);
std::optional<std::string> default_cache_dir();

const std::vector<std::string>& theorem_suites();

// Unit, associativity and yanking checks on seeded random Mat data.
CheckReport dprof_kernel(unsigned seed, int triples, int functors);

}  // namespace sn
