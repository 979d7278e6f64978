#include <iostream>

#include "pst/error.hpp"
#include "pst/report.hpp"

int main(int argc, char** argv) {
  pst::RunSpec spec;
  try {
    spec = pst::parse_args(argc, argv);
  } catch (const pst::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (spec.help) {
    std::cout << *spec.help;
    return 0;
  }
  try {
    const pst::Report r = pst::run(spec);
    pst::write_output(pst::emit_report(r, spec), spec);
    for (const auto& c : r.checks) {
      if (!c.pass) std::cerr << "check failed: " << c.name << "\n";
    }
    return r.ok() ? 0 : 1;
  } catch (const pst::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
