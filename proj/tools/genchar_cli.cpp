// genchar: generalized characters of S(n) and their symmetric functions.
//
//   genchar table   --n 4 --scaling paper [--format json] [--threads 2]
//   genchar gamma   --lam 3,2,1 --mu 3,2 --j 3 --rho 2,1
//   genchar gamma   --lam 3,2,1 --mu 3,2 --class 3*,2,1 --method syt
//   genchar schur   --lam 2 --mu 1 [--basis powersum]
//   genchar classes --n 4
//   genchar verify  --suite all --n-max 4 --seed 42
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "genchar/characters.hpp"
#include "genchar/gamma.hpp"
#include "genchar/partition.hpp"
#include "genchar/symfunc.hpp"
#include "genchar/verify.hpp"

using namespace genchar;

namespace {

constexpr int kMaxTableDegree = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Partition partition_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_partition(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": invalid partition '" + text + "' at position " + std::to_string(e.position()) + ": " +
                     e.what());
  }
}

ClassIndex class_arg(const std::string& text) {
  try {
    return parse_class_index(text);
  } catch (const ParseError& e) {
    throw UsageError("--class: invalid class '" + text + "' at position " + std::to_string(e.position()) + ": " +
                     e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError("--class: " + std::string(e.what()));
  }
}

CharPair pair_arg(const std::string& lam_text, const std::string& mu_text) {
  Partition lam = partition_arg("--lam", lam_text);
  Partition mu = partition_arg("--mu", mu_text);
  try {
    return CharPair(lam, mu);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--mu: ") + e.what());
  }
}

nlohmann::ordered_json class_json(const ClassIndex& c) {
  nlohmann::ordered_json out;
  out["j"] = c.j;
  out["rho"] = c.rho.parts();
  out["marked"] = to_marked_string(c);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized characters of the symmetric group"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  // table
  int table_n = 0;
  std::string scaling = "raw";
  int threads = 1;
  CLI::App* table = app.add_subcommand("table", "Generalized character table of S(n)");
  table->add_option("--n", table_n, "Degree")->required();
  table->add_option("--scaling", scaling, "raw values or the (n-1)!/dim(mu) scaled layout")
      ->check(CLI::IsMember({"raw", "paper"}));
  table->add_option("--threads", threads, "Worker threads for table cells")->check(CLI::PositiveNumber);
  add_format(table);

  // gamma
  std::string lam_text, mu_text, rho_text = "-", class_text, method = "mn";
  std::optional<int> j;
  CLI::App* gamma = app.add_subcommand("gamma", "A single generalized character value");
  gamma->add_option("--lam", lam_text, "Partition lambda, e.g. 3,2,1")->required();
  gamma->add_option("--mu", mu_text, "Partition mu obtained from lambda by removing one box")->required();
  auto* j_opt = gamma->add_option("--j", j, "Length of the cycle containing n");
  gamma->add_option("--rho", rho_text, "Cycle type of the remaining elements")->needs(j_opt);
  gamma->add_option("--class", class_text, "Class as j=3;rho=2,1 or 3*,2,1")->excludes(j_opt);
  gamma->add_option("--method", method, "mn rule, syt oracle or def (group sum) oracle")
      ->check(CLI::IsMember({"mn", "syt", "def"}));
  add_format(gamma);

  // schur
  std::string basis = "schur";
  CLI::App* schur = app.add_subcommand("schur", "Generalized Schur function in Lambda[t]");
  schur->add_option("--lam", lam_text, "Partition lambda")->required();
  schur->add_option("--mu", mu_text, "Partition mu")->required();
  schur->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"schur", "powersum"}));
  add_format(schur);

  // classes
  int classes_n = 0;
  CLI::App* classes = app.add_subcommand("classes", "S(n-1)-classes of S(n)");
  classes->add_option("--n", classes_n, "Degree")->required()->check(CLI::Range(1, 12));
  add_format(classes);

  // verify
  std::string suite = "all";
  int n_max = 4;
  std::uint64_t seed = 42;
  CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", suite, "oracles, orthogonality, greene, frobenius, cauchy or all");
  verify->add_option("--n-max", n_max, "Largest degree (box count for greene)")->check(CLI::Range(1, 8));
  verify->add_option("--seed", seed, "Seed for random points and class functions");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool json = format == "json";
  try {
    if (table->parsed()) {
      if (table_n < 2 || table_n > kMaxTableDegree) {
        throw UsageError("--n: degree must be between 2 and " + std::to_string(kMaxTableDegree));
      }
      auto t = build_table(table_n, scaling == "paper" ? Scaling::paper_scaled : Scaling::raw, threads);
      std::cout << (json ? render_json(t) + "\n" : render_text(t));
      return 0;
    }

    if (gamma->parsed()) {
      CharPair p = pair_arg(lam_text, mu_text);
      ClassIndex c;
      if (!class_text.empty()) {
        c = class_arg(class_text);
      } else if (j) {
        Partition rho = partition_arg("--rho", rho_text);
        try {
          c = ClassIndex(p.n(), *j, rho);
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--j/--rho: ") + e.what());
        }
      } else {
        throw UsageError("gamma needs --j (with optional --rho) or --class");
      }
      if (c.n != p.n()) {
        throw UsageError("class " + to_marked_string(c) + " belongs to S(" + std::to_string(c.n) + ") but lambda has " +
                         std::to_string(p.n()) + " boxes");
      }
      Rational value = method == "syt"   ? gamma_syt_oracle(p, c)
                       : method == "def" ? gamma_def_oracle(p, class_representative(c))
                                         : gamma_mn(p, c);
      if (json) {
        nlohmann::ordered_json doc;
        doc["lam"] = p.lam.parts();
        doc["mu"] = p.mu.parts();
        doc["class"] = class_json(c);
        doc["method"] = method;
        doc["value"] = to_string(value);
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << to_string(value) << "\n";
      }
      return 0;
    }

    if (schur->parsed()) {
      CharPair p = pair_arg(lam_text, mu_text);
      LtPoly s = gen_schur(p);
      if (basis == "powersum") s = to_powersum(s);
      if (json) {
        nlohmann::ordered_json doc;
        doc["lam"] = p.lam.parts();
        doc["mu"] = p.mu.parts();
        doc["marked"] = to_marked_string(p);
        doc["basis"] = basis;
        doc["terms"] = nlohmann::ordered_json::parse(to_json(s));
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << to_string(s) << "\n";
      }
      return 0;
    }

    if (classes->parsed()) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const ClassIndex& c : classes_of(classes_n)) {
        if (json) {
          nlohmann::ordered_json entry = class_json(c);
          entry["order"] = class_size(c).get_str();
          entry["representative"] = to_cycle_string(class_representative(c));
          doc.push_back(entry);
        } else {
          std::cout << to_marked_string(c) << "\t" << to_string(c) << "\t" << class_size(c).get_str() << "\t"
                    << to_cycle_string(class_representative(c)) << "\n";
        }
      }
      if (json) std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      VerifyReport report;
      try {
        report = run_verify(suite, n_max, seed);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--suite: ") + e.what());
      }
      std::cout << (json ? render_json(report) + "\n" : render_text(report));
      return report.all_passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
