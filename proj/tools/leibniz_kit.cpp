// leibniz-kit: invariants and automorphism groups of Leibniz algebras given
// by structure constants.
//
// Exit codes: 0 success, 1 Leibniz identity violated, 2 usage or parse
// error, 3 infinite field where enumeration is required, 4 enumeration
// guard exceeded, 5 algebra not extraspecial, 6 any other computation error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "leibniz/form.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLeibniz: return 1;
    case ErrorKind::Parse:
    case ErrorKind::NotPrime: return 2;
    case ErrorKind::InfiniteField: return 3;
    case ErrorKind::GuardExceeded: return 4;
    case ErrorKind::NotExtraspecial: return 5;
    default: return 6;
  }
}

void render_table(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_table(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const Json& report, bool table) {
  if (table) {
    render_table(report, "", std::cout);
  } else {
    std::cout << report.dump(2) << '\n';
  }
}

Algebra load(const std::string& path, bool unchecked) {
  auto file = read_algebra_file(path);
  if (unchecked) return Algebra::unchecked(std::move(file.constants), std::move(file.labels));
  return Algebra(std::move(file.constants), std::move(file.labels));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and automorphism groups of Leibniz algebras"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  bool table = false;
  app.add_flag("--table", table, "Print a flat key: value listing instead of JSON");

  std::string path;
  bool unchecked = false;

  auto* check = app.add_subcommand("check", "Verify the left Leibniz identity of a table");
  check->add_option("path", path, "Algebra JSON file")->required();

  auto* invariants = app.add_subcommand("invariants", "Kernel, centers, central series, class");
  invariants->add_option("path", path, "Algebra JSON file")->required();
  invariants->add_flag("--unchecked", unchecked, "Skip the Leibniz identity check on load");

  auto* aut = app.add_subcommand("aut", "Enumerate automorphisms; verify the Lei4(3,F) family");
  bool enumerate = false;
  bool verify = false;
  bool list_elements = false;
  bool list_differences = false;
  bool no_prune = false;
  bool timing = false;
  std::string lambda_text;
  std::uint64_t prime = 0;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  aut->add_option("path", path, "Algebra JSON file");
  aut->add_flag("--enumerate", enumerate, "Report the automorphism group order");
  aut->add_flag("--verify-theorem1", verify, "Compare the closed-form family with enumeration");
  aut->add_flag("--list-elements", list_elements, "Include every automorphism (column-major)");
  aut->add_flag("--list-differences", list_differences, "Include the symmetric difference");
  aut->add_option("--lambda", lambda_text, "Lambda for --verify-theorem1");
  aut->add_option("--field", prime, "Prime p for --verify-theorem1 without a file");
  aut->add_option("--jobs", jobs, "Enumeration worker threads")->check(CLI::Range(1U, 256U));
  aut->add_option("--seed", seed, "Seed for sampled pair checks");
  aut->add_flag("--no-prune", no_prune, "Scan every matrix instead of forcing bracket columns");
  aut->add_flag("--timing", timing, "Add wall-clock timing (makes output non-reproducible)");

  auto* form = app.add_subcommand("form", "Gram matrix of the form induced on L/Z(L)");
  std::string generator_text;
  form->add_option("path", path, "Algebra JSON file")->required();
  form->add_option("--generator", generator_text, "Comma-separated coordinates of c");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      auto file = read_algebra_file(path);
      const auto violations = check_left_leibniz(file.constants);
      emit(make_report(Json{{"name", "check"}, {"path", path}}, check_results(violations)), table);
      return violations.empty() ? 0 : 1;
    }

    if (invariants->parsed()) {
      const auto a = load(path, unchecked);
      emit(make_report(Json{{"name", "invariants"}, {"path", path}}, invariants_results(a)), table);
      return 0;
    }

    if (aut->parsed()) {
      if (!enumerate && !verify && !list_elements) enumerate = true;
      EnumerationOptions options;
      options.prune = !no_prune;
      options.jobs = jobs;
      options.guard = default_guard();
      Json command{{"name", "aut"}, {"path", path}, {"prune", options.prune}};
      const auto start = std::chrono::steady_clock::now();
      Json results;

      if (verify) {
        std::optional<FieldSpec> f;
        std::optional<Scalar> lambda;
        if (!path.empty()) {
          const auto a = load(path, false);
          f = a.field();
          lambda = lei4_lambda(a);
        }
        if (prime != 0) {
          if (f && f->characteristic() != prime) {
            std::cerr << "error: --field disagrees with the file's field\n";
            return 2;
          }
          f = FieldSpec::prime(prime);
        }
        if (!f) {
          std::cerr << "error: --verify-theorem1 needs a file or --field\n";
          return 2;
        }
        if (!lambda_text.empty()) lambda = Scalar::parse(*f, lambda_text);
        if (!lambda) {
          std::cerr << "error: the table is not of type Lei4(3,F); pass --lambda\n";
          return 2;
        }
        if (!f->is_finite()) throw Error(ErrorKind::InfiniteField, "verification needs GF(p)");
        command["field"] = field_to_json(*f);
        command["lambda"] = lambda->to_string();
        command["seed"] = seed;
        results = theorem1_results(verify_theorem1(*f, *lambda, seed, options), list_differences);
      } else {
        if (path.empty()) {
          std::cerr << "error: aut --enumerate needs an algebra file\n";
          return 2;
        }
        const auto a = load(path, false);
        results = enumeration_results(enumerate_automorphisms(a, options), list_elements);
      }
      auto report = make_report(command, std::move(results));
      if (timing) report["timing"] = Json{{"seconds", seconds_since(start)}};
      emit(report, table);
      return 0;
    }

    if (form->parsed()) {
      const auto a = load(path, false);
      Vector c;
      if (generator_text.empty()) {
        c = default_generator(a);
      } else {
        for (const auto& part : split(generator_text, ',')) c.push_back(Scalar::parse(a.field(), part));
      }
      emit(make_report(Json{{"name", "form"}, {"path", path}}, form_results(a, c)), table);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return 2;
}
