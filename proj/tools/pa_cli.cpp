// Command-line front end.  Subcommands are filled in as the library grows.

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "pa/el.hpp"
#include "pa/permarray.hpp"

int main(int argc, char** argv) {
  CLI::App app{"permutation-array toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  int n = 0, d = 0;
  bool count_only = false, emit_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "list permutation arrays");
  enumerate->add_option("--n", n, "lattice size")->required();
  enumerate->add_option("--d", d, "number of axes")->required();
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_flag("--emit-json", emit_json);

  std::string array_json;
  auto* validate = app.add_subcommand("validate", "check a permutation array");
  validate->add_option("--array", array_json, "JSON dot array")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (enumerate->parsed()) {
      long long count = 0;
      pa::enumerate_permutation_arrays(n, d, [&](const pa::DotArray& p) {
        ++count;
        if (!count_only) {
          if (emit_json)
            std::cout << p.to_json() << "\n";
          else {
            for (const auto& x : p.dots()) std::cout << pa::position_to_string(x) << " ";
            std::cout << "\n";
          }
        }
        return true;
      });
      if (count_only) std::cout << count << "\n";
      return 0;
    }
    if (validate->parsed()) {
      auto cert = pa::is_permutation_array(pa::DotArray::from_json(array_json));
      if (cert.ok()) {
        std::cout << "ok\n";
        return 0;
      }
      std::cout << "invalid: " << cert.witness << "\n";
      return 2;
    }
  } catch (const pa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return 64;
}
