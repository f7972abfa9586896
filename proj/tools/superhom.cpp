#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "superhom/cli.hpp"
#include "superhom/spec_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Second homology of generalized periplectic Lie superalgebras"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  superhom::Request req;
  std::size_t m = 0;
  std::vector<CLI::Option*> m_options;
  for (const auto& name : superhom::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("spec", req.spec, "builtin:<name> or an algebra spec JSON file")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (name != "export") m_options.push_back(sub->add_option("--m", m, "Matrix size (at least 3)"));
    if (name == "h2")
      sub->add_option("--construction", req.construction, "p or sl")->check(CLI::IsMember({"p", "sl"}));
    if (name == "cocycle") {
      sub->add_option("--which", req.which, "alpha, beta4 or beta3")
          ->check(CLI::IsMember({"alpha", "beta4", "beta3"}));
      sub->add_flag("--coboundary", req.coboundary, "Also decide whether the class is zero");
    }
    sub->callback([&req, name] { req.command = name; });
  }
  app.footer("builtins: " + [] {
    std::string s;
    for (const auto& b : superhom::builtin_names()) s += (s.empty() ? "" : ", ") + b;
    return s;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (const auto* opt : m_options)
    if (opt->count() > 0) req.m = m;

  superhom::Report rep = superhom::run_command(req);
  if (format == "json")
    std::cout << rep.doc.dump(2) << "\n";
  else
    std::cout << superhom::render_text(rep.doc);
  return rep.exit_code;
}
